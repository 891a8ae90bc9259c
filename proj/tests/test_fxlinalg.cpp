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
namespace oracle = skl_test::oracle;

namespace {

bool is_unit(const FPoly& p) { return fp_deg(p) == 0; }

TEST(FPoly, DivisionAndGcd) {
    const auto F = Field::gf(3);
    Rng rng(71);
    for (int t = 0; t < 200; ++t) {
        const FPoly a = rng.fpoly(*F, 6), b = rng.fpoly(*F, 4);
        if (b.empty()) continue;
        const auto [q, r] = fp_divmod(*F, a, b);
        EXPECT_EQ(fp_add(*F, fp_mul(*F, q, b), r), a);
        EXPECT_LT(fp_deg(r), fp_deg(b));
        EXPECT_EQ(r, oracle::poly_rem(*F, a, b));
        const FPoly g = fp_gcd(*F, a, b);
        EXPECT_TRUE(fp_divides(*F, g, a));
        EXPECT_TRUE(fp_divides(*F, g, b));
    }
    EXPECT_THROW(fp_divmod(*F, FPoly{1}, FPoly{}), zero_division_error);
}

TEST(PolyMatrix, DeterminantMatchesCofactors) {
    const auto F = Field::gf(2, 2);
    Rng rng(72);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng.below(4);
        const auto M = rng.poly_matrix(*F, n, n, 2);
        EXPECT_EQ(pm_det(*F, M), oracle::det_laplace(*F, M));
    }
}

class SmithShapes : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(SmithShapes, Invariants) {
    const auto F = Field::gf(GetParam().first, GetParam().second);
    Rng rng(73 + F->order());
    for (int t = 0; t < 40; ++t) {
        const std::size_t k = 1 + rng.below(4), n = 1 + rng.below(6);
        const auto G = rng.poly_matrix(*F, k, n, 3);
        const auto s = smith_form(*F, G);
        EXPECT_EQ(pm_mul(*F, pm_mul(*F, s.U, G), s.V), s.D);
        EXPECT_EQ(pm_mul(*F, s.V, s.Vinv), PolyMatrix::identity(n));
        EXPECT_TRUE(is_unit(pm_det(*F, s.U)));
        EXPECT_TRUE(is_unit(pm_det(*F, s.V)));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) {
                    EXPECT_TRUE(s.D(i, j).empty());
                }
        for (std::size_t i = 0; i < s.rank; ++i) {
            EXPECT_EQ(s.D(i, i).back(), 1u);
            if (i + 1 < s.rank) {
                EXPECT_TRUE(fp_divides(*F, s.D(i, i), s.D(i + 1, i + 1)));
            }
        }
        for (std::size_t i = s.rank; i < std::min(k, n); ++i) EXPECT_TRUE(s.D(i, i).empty());
        EXPECT_EQ(s.rank, rank_over_fraction_field(*F, G));
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, SmithShapes,
                         ::testing::Values(std::make_pair(2u, 1u), std::make_pair(2u, 2u), std::make_pair(3u, 1u)));

TEST(PolyMatrix, HermiteIsCanonical) {
    const auto F = Field::gf(2, 2);
    Rng rng(74);
    for (int t = 0; t < 60; ++t) {
        const auto G = rng.poly_matrix(*F, 1 + rng.below(3), 1 + rng.below(4), 2);
        const auto h = hermite_form(*F, G);
        EXPECT_EQ(pm_mul(*F, h.U, G), h.H);
        EXPECT_TRUE(is_unit(pm_det(*F, h.U)));
        for (std::size_t i = 0; i < h.pivots.size(); ++i) {
            const std::size_t c = h.pivots[i];
            EXPECT_EQ(h.H(i, c).back(), 1u);
            for (std::size_t r = 0; r < i; ++r) EXPECT_LT(fp_deg(h.H(r, c)), fp_deg(h.H(i, c)));
            for (std::size_t r = i + 1; r < G.rows(); ++r) EXPECT_TRUE(h.H(r, c).empty());
        }
        // a unimodular change of generators gives the same basis
        PolyMatrix W = G;
        if (G.rows() > 1) W.add_row_multiple(*F, 0, rng.fpoly(*F, 2), 1);
        W.swap_rows(0, G.rows() - 1);
        EXPECT_EQ(row_module_basis(*F, W), row_module_basis(*F, G));
    }
}

TEST(PolyMatrix, ClosureIsExtensiveIdempotentAndPure) {
    const auto F = Field::gf(2);
    Rng rng(75);
    for (int t = 0; t < 60; ++t) {
        const auto G = rng.poly_matrix(*F, 1 + rng.below(3), 2 + rng.below(3), 3);
        const auto C = closure(*F, G);
        EXPECT_EQ(closure(*F, C), C);
        for (std::size_t i = 0; i < G.rows(); ++i) EXPECT_TRUE(membership(*F, G.row(i), C).has_value());
        EXPECT_TRUE(is_direct_summand(*F, C));
        EXPECT_EQ(C.rows(), rank_over_fraction_field(*F, G));
    }
    // (X, 0) closes to (1, 0)
    const auto C = closure(*F, PolyMatrix::from_rows({{FPoly{0, 1}, FPoly{}}}, 2));
    EXPECT_EQ(C, PolyMatrix::from_rows({{FPoly{1}, FPoly{}}}, 2));
    EXPECT_FALSE(is_direct_summand(*F, PolyMatrix::from_rows({{FPoly{0, 1}, FPoly{}}}, 2)));
}

class MembershipFields : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(MembershipFields, AgreesWithEnumeration) {
    const auto F = Field::gf(2, GetParam());
    Rng rng(76 + GetParam());
    const std::size_t k_max = GetParam() == 1 ? 3 : 2;
    for (int t = 0; t < 25; ++t) {
        const std::size_t n = 1 + rng.below(3), k = 1 + rng.below(k_max);
        const auto G = rng.poly_matrix(*F, k, n, 2);
        std::vector<FPoly> v(n);
        if (rng.below(2) == 0) {
            std::vector<FPoly> x(k);
            for (auto& p : x) p = rng.fpoly(*F, 2);
            v = pm_row_times(*F, x, G);
        } else {
            for (auto& p : v) p = rng.fpoly(*F, 3);
        }
        const auto got = membership(*F, v, G);
        const auto brute = oracle::brute_membership(*F, v, G, 2);
        EXPECT_TRUE(!brute || got.has_value());
        EXPECT_TRUE(!got || oracle::same_row(*F, pm_row_times(*F, *got, G), v));
    }
}

INSTANTIATE_TEST_SUITE_P(F2F4, MembershipFields, ::testing::Values(1u, 2u));

}  // namespace
