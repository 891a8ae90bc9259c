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
using skl_test::Rng;

namespace {

TEST(Text, XPowers) {
    EXPECT_EQ(x_power_string(0), "");
    EXPECT_EQ(x_power_string(1), "X");
    EXPECT_EQ(x_power_string(-3), "X^-3");
}

TEST(Text, SkewPolyPrinting) {
    const SkewContext ctx(worked::f4c5_group());
    const Algebra& A = ctx.algebra();
    EXPECT_EQ(to_string(A, SkewPoly{}), "0");
    EXPECT_EQ(to_string(A, x_power(ctx, 2)), "X^2");
    const auto f = parse_skew_poly(A, "g*X^2 + a");
    EXPECT_EQ(to_string(A, f), "g*X^2 + a");
    EXPECT_EQ(to_string(A, parse_skew_poly(A, "(g + 1)*X")), "(1 + g)*X");
}

TEST(Text, PolyRoundTrip) {
    for (const char* name : {"m2f4-inner", "f4c5-group", "fyz-quotient"}) {
        const SkewContext ctx(worked::by_name(name));
        Rng rng(91);
        for (int t = 0; t < 50; ++t) {
            const auto f = rng.poly(ctx, 4);
            EXPECT_EQ(parse_skew_poly(ctx.algebra(), to_string(ctx.algebra(), f)), f) << name;
        }
    }
}

TEST(Text, SeriesAndLaurent) {
    const SkewContext ctx(worked::f4c5_group());
    const Algebra& A = ctx.algebra();
    EXPECT_EQ(to_string(A, TruncSeries{{A.unit(), A.zero()}}), "1 + O(X^2)");
    EXPECT_EQ(to_string(A, TruncSeries{}), "O(1)");
    EXPECT_EQ(to_string(A, TruncLaurent(-1, {A.unit(), A.zero()})), "X^-1 + O(X)");
    EXPECT_EQ(to_string(A, TruncLaurent::zero_mod(0)), "O(1)");
    const auto [lo, c] = parse_laurent_terms(A, "X^-2 + g");
    EXPECT_EQ(lo, -2);
    EXPECT_EQ(c.size(), 3u);
    EXPECT_EQ(c[2], A.basis(1));
}

TEST(Text, FieldPolynomials) {
    const auto F = Field::gf(2, 2, "a");
    const auto p = parse_fpoly(*F, "X^2 + a*X + 1");
    EXPECT_EQ(p, (FPoly{1, F->generator(), 1}));
    EXPECT_EQ(fp_to_string(*F, p), "X^2 + a*X + 1");
    EXPECT_EQ(row_string(*F, {p, FPoly{}, FPoly{1}}), "[X^2 + a*X + 1, 0, 1]");
    EXPECT_EQ(vector_string(*F, Vec{0, 1, F->generator()}), "(0, 1, a)");
}

TEST(Text, Errors) {
    const SkewContext ctx(worked::f4c5_group());
    const Algebra& A = ctx.algebra();
    EXPECT_THROW(parse_skew_poly(A, "X^-1"), parse_error);
    EXPECT_THROW(parse_skew_poly(A, ""), parse_error);
    EXPECT_THROW(parse_skew_poly(A, "g +"), parse_error);
    EXPECT_THROW(parse_skew_poly(A, "(g + 1"), parse_error);
    EXPECT_THROW(parse_skew_poly(A, "X^"), parse_error);
    EXPECT_THROW(parse_skew_poly(A, "h*X"), parse_error);
    EXPECT_THROW(parse_fpoly(*Field::gf(2), "X^-2"), parse_error);
}

}  // namespace
