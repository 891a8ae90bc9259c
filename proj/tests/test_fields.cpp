/*
   Copyright 2026 The skl Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace skl;
using skl_test::oracle::NaiveField;

namespace {

struct Shape {
    std::uint32_t p, k;
};

class FieldTables : public ::testing::TestWithParam<Shape> {};

TEST_P(FieldTables, AgreeWithSchoolbookArithmetic) {
    const auto [p, k] = GetParam();
    const auto F = Field::gf(p, k);
    const NaiveField ref{p, F->spec().modulus};
    ASSERT_TRUE(ref.irreducible());
    const auto elems = ref.elements();
    ASSERT_EQ(elems.size(), F->order());
    for (const auto& a : elems)
        for (const auto& b : elems) {
            const Elem x = F->from_coeffs(a), y = F->from_coeffs(b);
            ASSERT_EQ(F->mul(x, y), F->from_coeffs(ref.mul(a, b)));
            ASSERT_EQ(F->add(x, y), F->from_coeffs(ref.add(a, b)));
            ASSERT_EQ(F->sub(F->add(x, y), y), x);
        }
}

TEST_P(FieldTables, InversesPowersAndFrobenius) {
    const auto [p, k] = GetParam();
    const auto F = Field::gf(p, k);
    for (Elem x = 1; x < F->order(); ++x) {
        EXPECT_EQ(F->mul(x, F->inv(x)), 1u);
        EXPECT_EQ(F->pow(x, F->order() - 1), 1u);
        EXPECT_EQ(F->pow(x, -1), F->inv(x));
    }
    for (Elem x = 0; x < F->order(); ++x)
        for (Elem y = 0; y < F->order(); ++y) EXPECT_EQ(F->frobenius(F->add(x, y)), F->add(F->frobenius(x), F->frobenius(y)));
}

TEST_P(FieldTables, TextRoundTrip) {
    const auto [p, k] = GetParam();
    const auto F = Field::gf(p, k);
    for (Elem x = 0; x < F->order(); ++x) EXPECT_EQ(F->parse(F->to_string(x)), x) << F->to_string(x);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldTables,
                         ::testing::Values(Shape{2, 1}, Shape{3, 1}, Shape{5, 1}, Shape{2, 2}, Shape{2, 3}, Shape{3, 2},
                                           Shape{2, 4}, Shape{5, 2}));

TEST(Field, F4Generator) {
    const auto F = Field::gf(2, 2, "a");
    const Elem a = F->generator();
    // a^2 + a + 1 = 0
    EXPECT_EQ(F->add(F->add(F->mul(a, a), a), 1), 0u);
    EXPECT_EQ(F->to_string(F->add(a, 1)), "a+1");
    EXPECT_EQ(F->parse("a^2"), F->add(a, 1));
}

TEST(Field, Errors) {
    EXPECT_THROW(Field::gf(4), axiom_error);
    EXPECT_THROW(Field::gf(2, 0), axiom_error);
    EXPECT_THROW(Field::make(FieldSpec{2, 2, {1, 0, 1}}), axiom_error);  // x^2 + 1 = (x + 1)^2
    const auto F = Field::gf(3);
    EXPECT_THROW(F->inv(0), zero_division_error);
    EXPECT_THROW(F->parse("a + "), parse_error);
    const auto G = Field::gf(5);
    EXPECT_THROW(FieldElement::one(F) + FieldElement::one(G), mismatch_error);
}

TEST(Field, ExplicitModulus) {
    // GF(8) from x^3 + x^2 + 1 instead of the default
    const auto F = Field::make(FieldSpec{2, 3, {1, 0, 1, 1}});
    const NaiveField ref{2, {1, 0, 1, 1}};
    for (const auto& a : ref.elements())
        for (const auto& b : ref.elements()) EXPECT_EQ(F->mul(F->from_coeffs(a), F->from_coeffs(b)), F->from_coeffs(ref.mul(a, b)));
}

}  // namespace
