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

// F4 C5 with sigma = id, delta = 0: codes are ideals of F4[X][t]/(t^5 - 1)
struct Classical {
    std::shared_ptr<const Algebra> A = group_algebra_cyclic(Field::gf(2, 2, "a"), 5, "g");
    std::shared_ptr<const SkewDerivation> d = SkewDerivation::make(A, Matrix::identity(5), Matrix(5, 5));
    SkewContext ctx{d};
    RightModuleSpec M = regular_module(A);
    const Field& F() const { return ctx.field(); }
};

// row of F[X] entries -> coefficient of X^i as a polynomial in t
FPoly slice(const std::vector<FPoly>& row, std::size_t i) {
    FPoly p(row.size(), 0);
    for (std::size_t j = 0; j < row.size(); ++j)
        if (i < row[j].size()) p[j] = row[j][i];
    fp_trim(p);
    return p;
}

TEST(Codes, ClassicalCyclicCodesOverF4) {
    Classical c;
    const Field& F = c.F();
    const Elem a = F.generator(), a2 = F.mul(a, a);
    const FPoly f1{1, 1}, f2{1, a, 1}, f3{1, a2, 1};
    EXPECT_EQ(fp_mul(F, fp_mul(F, f1, f2), f3), (FPoly{1, 0, 0, 0, 0, 1}));
    for (const auto& [gen, rank] : std::vector<std::pair<FPoly, std::size_t>>{
             {f1, 4}, {f2, 3}, {f3, 3}, {fp_mul(F, f1, f2), 2}, {fp_mul(F, f2, f3), 1}}) {
        std::vector<FPoly> row(5);
        for (std::size_t j = 0; j < gen.size(); ++j) row[j] = fp_const(gen[j]);
        // an X-multiple of the generator: the closure must undo it
        for (auto& p : row) p = fp_mul(F, p, FPoly{0, 1});
        const auto res = cyclic_closure(c.ctx, c.M, PolyMatrix::from_rows({row}, 5));
        EXPECT_EQ(res.code.k(), rank);
        EXPECT_TRUE(res.code.pure);
        EXPECT_TRUE(res.code.stable);
        const auto& G = res.code.G;
        for (std::size_t i = 0; i < G.rows(); ++i) {
            std::size_t len = 0;
            for (const auto& p : G.row(i)) len = std::max(len, p.size());
            for (std::size_t e = 0; e < len; ++e) EXPECT_TRUE(oracle::poly_rem(F, slice(G.row(i), e), gen).empty());
        }
    }
}

TEST(Codes, ZeroDerivationTrivialAction) {
    // A = F, trivial action on F^2: every F[X]-submodule is stable
    const auto F = Field::gf(2);
    const auto A = quotient_algebra_tn(F, Vec{0, 1}, "t");
    const auto d = SkewDerivation::make(A, Matrix::identity(1), Matrix(1, 1));
    const SkewContext ctx(d);
    const auto M = trivial_action_module(A, 2);
    const auto C = code_from_matrix(ctx, M, PolyMatrix::from_rows({{FPoly{0, 1}, FPoly{}}}, 2));
    EXPECT_EQ(C.G, PolyMatrix::from_rows({{FPoly{1}, FPoly{}}}, 2));
    EXPECT_TRUE(C.pure);
    EXPECT_TRUE(C.stable);
    EXPECT_FALSE(is_direct_summand(*F, PolyMatrix::from_rows({{FPoly{0, 1}, FPoly{}}}, 2)));
}

TEST(Codes, FirstUnitVectorIsNotStableInRegularM2F4) {
    const SkewContext ctx(worked::m2f4_inner());
    const auto M = regular_module(ctx.derivation().algebra_ptr());
    std::vector<FPoly> e1(8);
    e1[0] = FPoly{1};
    const auto C = code_from_matrix(ctx, M, PolyMatrix::from_rows({e1}, 8));
    EXPECT_TRUE(C.pure);
    EXPECT_FALSE(C.stable);
    const auto res = cyclic_closure(ctx, M, PolyMatrix::from_rows({e1}, 8));
    EXPECT_TRUE(res.code.stable);
    EXPECT_GT(res.code.k(), 1u);
    EXPECT_TRUE(membership(ctx.field(), e1, res.code.G).has_value());
}

TEST(Codes, IdentityRowsGiveTheWholeSpace) {
    const SkewContext ctx(worked::m2f4_inner());
    const auto M = matrix_row_module(ctx.derivation().algebra_ptr(), 2);
    const auto C = code_from_matrix(ctx, M, PolyMatrix::identity(4));
    EXPECT_EQ(C.k(), 4u);
    EXPECT_TRUE(C.pure);
    EXPECT_TRUE(C.stable);
}

TEST(Codes, NormElementSpansAStableLine) {
    const SkewContext ctx(worked::f4c5_group());
    const auto M = regular_module(ctx.derivation().algebra_ptr());
    const std::vector<FPoly> norm(5, FPoly{1});
    const auto C = code_from_matrix(ctx, M, PolyMatrix::from_rows({norm}, 5));
    EXPECT_EQ(C.k(), 1u);
    EXPECT_TRUE(C.pure);
    EXPECT_TRUE(C.stable);
    const auto aug = cyclic_closure(ctx, M, PolyMatrix::from_rows({{FPoly{1}, FPoly{1}, {}, {}, {}}}, 5));
    EXPECT_EQ(aug.code.k(), 4u);
    // the augmentation ideal: coordinate sums vanish
    for (std::size_t i = 0; i < aug.code.G.rows(); ++i) {
        FPoly sum;
        for (const auto& p : aug.code.G.row(i)) sum = fp_add(ctx.field(), sum, p);
        EXPECT_TRUE(sum.empty());
    }
}

class ClosureContexts : public ::testing::TestWithParam<int> {};

TEST_P(ClosureContexts, ClosureProperties) {
    const int which = GetParam();
    const SkewContext ctx(which == 2 ? worked::f4c5_group() : worked::m2f4_inner());
    const auto A = ctx.derivation().algebra_ptr();
    const auto M = which == 1 ? matrix_row_module(A, 2) : regular_module(A);
    const Field& F = ctx.field();
    Rng rng(81 + which);
    for (int t = 0; t < 6; ++t) {
        const auto B = rng.poly_matrix(F, 1, M.n(), 2);
        const auto res = cyclic_closure(ctx, M, B);
        const auto& C = res.code;
        EXPECT_TRUE(C.pure);
        EXPECT_TRUE(C.stable);
        EXPECT_TRUE(std::is_sorted(res.rank_trace.begin(), res.rank_trace.end()));
        for (std::size_t i = 0; i < B.rows(); ++i) EXPECT_TRUE(membership(F, B.row(i), C.G).has_value());
        EXPECT_EQ(cyclic_closure(ctx, M, C.G).code.G, C.G);
        const auto rt = correspondence_roundtrip(ctx, M, C);
        EXPECT_TRUE(rt.passed());
        // closed under right multiplication by ring elements
        for (int u = 0; u < 10; ++u) {
            const auto f = rng.poly(ctx, 3);
            const auto g = row_to_vecpoly(C.G.row(rng.below(C.k())));
            const auto w = vecpoly_times_ring(ctx, M, g, f);
            EXPECT_TRUE(membership(F, vecpoly_to_row(w, M.n()), C.G).has_value());
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Stock, ClosureContexts, ::testing::Values(0, 1, 2));

TEST(Codes, EncodeRoundTrip) {
    const SkewContext ctx(worked::f4c5_group());
    const auto M = regular_module(ctx.derivation().algebra_ptr());
    const Field& F = ctx.field();
    const auto C = cyclic_closure(ctx, M, PolyMatrix::from_rows({{FPoly{1}, FPoly{1}, {}, {}, {}}}, 5)).code;
    Rng rng(84);
    for (int t = 0; t < 200; ++t) {
        std::vector<FPoly> msg(C.k());
        for (auto& p : msg) p = rng.fpoly(F, 3);
        const auto word = encode(F, msg, C);
        const auto back = membership(F, vecpoly_to_row(word, 5), C.G);
        ASSERT_TRUE(back.has_value());
        EXPECT_TRUE(oracle::same_row(F, *back, msg));
    }
    EXPECT_THROW(encode(F, {FPoly{1}}, C), dimension_error);
}

TEST(Codes, RowConversions) {
    const std::vector<FPoly> row{FPoly{1, 0, 1}, FPoly{}, FPoly{0, 1}};
    const auto v = row_to_vecpoly(row);
    EXPECT_EQ(v.size(), 3u);
    EXPECT_EQ(vecpoly_to_row(v, 3), row);
}

TEST(Codes, Errors) {
    const SkewContext ctx(worked::f4c5_group());
    const auto M = regular_module(ctx.derivation().algebra_ptr());
    EXPECT_THROW(cyclic_closure(ctx, M, PolyMatrix::identity(3)), dimension_error);
    const SkewContext other(worked::m2f4_inner());
    EXPECT_THROW(code_from_matrix(other, M, PolyMatrix::identity(5)), mismatch_error);
}

}  // namespace
