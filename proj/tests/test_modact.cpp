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

VecPoly random_vecpoly(Rng& rng, const RightModuleSpec& M, std::size_t max_deg) {
    return VecPoly(rng.coeffs(M.field(), M.n(), 1 + rng.below(max_deg + 1)));
}

TEST(Module, StockModulesAreModules) {
    const auto m2 = worked::m2f4_inner()->algebra_ptr();
    const auto g5 = worked::f4c5_group()->algebra_ptr();
    for (const auto& M : {regular_module(m2), matrix_row_module(m2, 2), regular_module(g5), trivial_action_module(g5, 3),
                          matrix_row_module(matrix_algebra(Field::gf(3), 2), 2)}) {
        const auto rep = module_verify(M);
        EXPECT_TRUE(rep.valid) << (rep.failures.empty() ? "" : rep.failures.front());
    }
    EXPECT_EQ(matrix_row_module(m2, 2).n(), 4u);
    EXPECT_EQ(regular_module(m2).n(), 8u);
}

TEST(Module, TrivialActionIsNotAModuleForMatrices) {
    const auto A = matrix_algebra(Field::gf(2), 2);
    EXPECT_FALSE(module_verify(trivial_action_module(A, 2)).valid);
}

TEST(Module, RowModuleIsVectorTimesMatrix) {
    const auto d = worked::m2f4_inner();
    const Algebra& A = d->algebra();
    const Field& K = *A.restriction()->ext;
    const auto M = matrix_row_module(d->algebra_ptr(), 2);
    Rng rng(61);
    for (int t = 0; t < 100; ++t) {
        const Vec x = rng.vec(K, 4);  // [x0 x1; x2 x3]
        const Vec v = rng.vec(K, 2);
        const Vec want{K.add(K.mul(v[0], x[0]), K.mul(v[1], x[2])), K.add(K.mul(v[0], x[1]), K.mul(v[1], x[3]))};
        // K^2 read as F_2^4, two digits per entry
        Vec vf;
        for (Elem c : v)
            for (auto dgt : K.coeffs(c)) vf.push_back(dgt);
        const Vec got = M.act(vf, detail::to_restricted(A, x));
        Vec wf;
        for (Elem c : want)
            for (auto dgt : K.coeffs(c)) wf.push_back(dgt);
        EXPECT_EQ(got, wf);
    }
}

class ModuleContexts : public ::testing::TestWithParam<const char*> {
   protected:
    SkewContext ctx{worked::by_name(GetParam())};
    RightModuleSpec M = regular_module(ctx.derivation().algebra_ptr());
};

TEST_P(ModuleContexts, RegularActionIsRingProduct) {
    Rng rng(62);
    for (int t = 0; t < 30; ++t) {
        const auto f = rng.poly(ctx, 3), g = rng.poly(ctx, 3);
        const VecPoly v(f.coeffs);
        EXPECT_EQ(vecpoly_times_ring(ctx, M, v, g).coeffs, poly_mul(ctx, f, g).coeffs);
    }
}

TEST_P(ModuleContexts, ActionIsAssociative) {
    Rng rng(63);
    for (int t = 0; t < 30; ++t) {
        const auto v = random_vecpoly(rng, M, 3);
        const auto f = rng.poly(ctx, 3), g = rng.poly(ctx, 3);
        EXPECT_EQ(vecpoly_times_ring(ctx, M, vecpoly_times_ring(ctx, M, v, f), g),
                  vecpoly_times_ring(ctx, M, v, poly_mul(ctx, f, g)));
    }
}

TEST_P(ModuleContexts, SeriesActionMatchesPolynomialAction) {
    Rng rng(64);
    const std::size_t m = ctx.m_delta(), N = 6;
    for (int t = 0; t < 20; ++t) {
        const auto v = random_vecpoly(rng, M, 4);
        const auto f = rng.poly(ctx, 4);
        const auto want = to_series(vecpoly_times_ring(ctx, M, v, f), N, M.n());
        EXPECT_EQ(vecseries_times_ring(ctx, M, to_series(v, N * m, M.n()), to_series(ctx, f, N), N), want);
    }
}

TEST_P(ModuleContexts, LaurentScalarDirectFormulaMatchesComposedProduct) {
    Rng rng(65);
    const std::size_t m = ctx.m_delta();
    for (int t = 0; t < 30; ++t) {
        auto c = rng.coeffs(M.field(), M.n(), 6 * m);
        c[0] = rng.vec(M.field(), M.n());
        if (is_zero(c[0])) c[0][0] = 1;
        const VecLaurent s(static_cast<std::int64_t>(rng.below(7)) - 4, c);
        const Vec a = rng.vec(ctx.field(), ctx.dim());
        const auto direct = veclaurent_times_scalar(ctx, M, s, a);
        std::vector<Vec> ac(6 * m, ctx.algebra().zero());
        ac[0] = a;
        const auto composed = veclaurent_times_ring(ctx, M, s, TruncLaurent(0, ac));
        const std::int64_t hi = std::min(direct.hi(), composed.hi());
        EXPECT_TRUE(agree_on(direct, composed, hi, M.n()));
        EXPECT_GE(hi, std::max(direct.ord, composed.ord));
    }
}

INSTANTIATE_TEST_SUITE_P(Stock, ModuleContexts, ::testing::Values("m2f4-inner", "f4c5-group"), [](const auto& info) {
    std::string s = info.param;
    for (auto& c : s)
        if (c == '-') c = '_';
    return s;
});

TEST(Module, SigmaTwistedActionWhenDeltaIsZero) {
    const auto A = group_algebra_cyclic(Field::gf(2, 2), 5, "g");
    const auto d = SkewDerivation::make(A, worked::cyclic_doubling(*A), Matrix(5, 5));
    const SkewContext ctx(d);
    const auto M = regular_module(A);
    Rng rng(66);
    for (int t = 0; t < 30; ++t) {
        const auto c = rng.coeffs(M.field(), 5, 8);
        const VecLaurent s(static_cast<std::int64_t>(rng.below(9)) - 4, c);
        if (s.is_zero()) continue;
        const Vec a = rng.vec(ctx.field(), 5);
        const auto got = veclaurent_times_scalar(ctx, M, s, a);
        const VecLaurent want(s.ord, oracle::sigma_twist_module(*d, M, s.ord, s.coeffs, a));
        EXPECT_TRUE(agree_on(got, want, std::min(got.hi(), want.hi()), 5));
    }
}

TEST(Module, FieldScalarsActByConvolution) {
    const SkewContext ctx(worked::f4c5_group());
    const auto M = regular_module(ctx.derivation().algebra_ptr());
    Rng rng(67);
    for (int t = 0; t < 20; ++t) {
        auto c = rng.coeffs(M.field(), 5, 12);
        c[0] = Vec{1, 0, 0, 0, 0};
        const VecLaurent s(-1, c);
        FLaurent f{static_cast<std::int64_t>(rng.below(3)) - 1, {}};
        for (int i = 0; i < 12; ++i) f.coeffs.push_back(rng.elem(M.field()));
        f.coeffs[0] = 1;
        const auto conv = flsx_scalar_action(M.field(), s, f, 5);
        const auto ring = veclaurent_times_ring(ctx, M, s, embed_flaurent(ctx, f));
        const std::int64_t hi = std::min(conv.hi(), ring.hi());
        EXPECT_TRUE(agree_on(conv, ring, hi, 5));
    }
}

TEST(Module, Errors) {
    const SkewContext ctx(worked::f4c5_group());
    const auto M = regular_module(ctx.derivation().algebra_ptr());
    EXPECT_THROW(M.act(Vec{1, 0}, ctx.algebra().unit()), dimension_error);
    EXPECT_THROW(RightModuleSpec(ctx.derivation().algebra_ptr(), 2, {}), dimension_error);
    const auto other = regular_module(worked::m2f4_inner()->algebra_ptr());
    EXPECT_THROW(vecpoly_times_scalar(ctx, other, VecPoly{}, ctx.algebra().unit()), mismatch_error);
}

}  // namespace
