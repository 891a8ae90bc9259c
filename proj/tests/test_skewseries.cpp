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

class SeriesContexts : public ::testing::TestWithParam<const char*> {
   protected:
    SkewContext ctx{worked::by_name(GetParam())};
    std::size_t m() const { return ctx.m_delta(); }
};

TEST_P(SeriesContexts, PolynomialsMultiplyAsInThePolynomialRing) {
    Rng rng(41);
    const std::size_t N = 8;
    for (int t = 0; t < 40; ++t) {
        const auto f = rng.poly(ctx, 5), g = rng.poly(ctx, 5);
        const auto want = to_series(ctx, oracle::rewrite_mul(ctx.derivation(), f, g), N);
        EXPECT_EQ(series_mul(ctx, to_series(ctx, f, N * m()), to_series(ctx, g, N), N), want);
    }
}

TEST_P(SeriesContexts, QIndependence) {
    Rng rng(42);
    const std::size_t N = 8;
    for (int t = 0; t < 20; ++t) {
        const auto s = rng.series(ctx, q_bound(ctx, N - 1) + 6), u = rng.series(ctx, N);
        const auto full = series_mul(ctx, s, u, N);
        for (std::size_t n = 0; n < N; ++n) {
            const auto a = series_mul_coeff_with_q(ctx, s, u, n, q_bound(ctx, n));
            EXPECT_EQ(a, series_mul_coeff_with_q(ctx, s, u, n, q_bound(ctx, n) + 5));
            EXPECT_EQ(a, full.coeffs[n]);
        }
    }
}

TEST_P(SeriesContexts, TruncatedAssociativity) {
    Rng rng(43);
    const std::size_t N = 6, M = m();
    for (int t = 0; t < 15; ++t) {
        const auto s = rng.series(ctx, N * M * M), u = rng.series(ctx, N * M), v = rng.series(ctx, N);
        const auto lhs = series_mul(ctx, series_mul(ctx, s, u, N * M), v, N);
        const auto rhs = series_mul(ctx, s, series_mul(ctx, u, v, N), N);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST_P(SeriesContexts, ScalarProductAgreesWithSeriesProduct) {
    Rng rng(44);
    const std::size_t N = 6;
    for (int t = 0; t < 20; ++t) {
        const auto s = rng.series(ctx, N * m());
        const Vec a = rng.vec(ctx.field(), ctx.dim());
        EXPECT_EQ(series_times_scalar(ctx, s, a), series_mul(ctx, s, to_series(ctx, constant(ctx, a), N), N));
    }
}

TEST_P(SeriesContexts, XTimesSeries) {
    Rng rng(45);
    for (int t = 0; t < 20; ++t) {
        const auto s = rng.series(ctx, 7);
        EXPECT_EQ(x_times_series(ctx, s), series_mul(ctx, to_series(ctx, x_power(ctx, 1), 7 * m()), s, 7));
    }
}

TEST_P(SeriesContexts, OreWitnessMultipliesBack) {
    Rng rng(46);
    for (int t = 0; t < 40; ++t) {
        const auto f = rng.poly(ctx, 5);
        const auto w = ore_left(ctx, f);
        std::vector<Vec> xn(w.n + 1, ctx.algebra().zero());
        xn[w.n] = ctx.algebra().unit();
        EXPECT_EQ(oracle::rewrite_mul(ctx.derivation(), SkewPoly(xn), f),
                  oracle::rewrite_mul(ctx.derivation(), w.g, x_power(ctx, 1)));
        EXPECT_LE(w.n, m());
        const auto w3 = ore_left_power(ctx, f, 3);
        EXPECT_EQ(xn_times(ctx, f, w3.n), poly_mul(ctx, w3.g, x_power(ctx, 3)));
    }
}

TEST_P(SeriesContexts, SeriesOreWitness) {
    Rng rng(47);
    for (int t = 0; t < 30; ++t) {
        const auto s = rng.series(ctx, 9);
        const auto w = ore_left(ctx, s);
        ASSERT_EQ(w.g.prec(), 8u);
        TruncSeries lhs = s;
        for (std::size_t i = 0; i < w.n; ++i) lhs = x_times_series(ctx, lhs);
        // g X shifts by one: known to precision 9
        std::vector<Vec> gx{ctx.algebra().zero()};
        gx.insert(gx.end(), w.g.coeffs.begin(), w.g.coeffs.end());
        EXPECT_EQ(lhs, TruncSeries{gx});
    }
}

TEST_P(SeriesContexts, PrecisionContract) {
    Rng rng(48);
    const auto s = rng.series(ctx, 4 * m() - 1), u = rng.series(ctx, 4);
    EXPECT_THROW(series_mul(ctx, s, u, 4), precision_error);
    EXPECT_EQ(series_mul_max_prec(ctx, s.prec(), u.prec()), (4 * m() - 1) / m());
    EXPECT_THROW(series_mul(ctx, rng.series(ctx, 4 * m()), rng.series(ctx, 3), 4), precision_error);
}

INSTANTIATE_TEST_SUITE_P(Stock, SeriesContexts, ::testing::Values("m2f4-inner", "f4c5-group", "fyz-quotient"),
                         [](const auto& info) {
                             std::string s = info.param;
                             for (auto& c : s)
                                 if (c == '-') c = '_';
                             return s;
                         });

TEST(Series, RefusedWithoutNilpotentDelta) {
    const SkewContext ctx(worked::m2f4_diag());
    Rng rng(49);
    EXPECT_THROW(series_mul(ctx, rng.series(ctx, 4), rng.series(ctx, 4), 2), context_error);
    EXPECT_THROW(ore_left(ctx, x_power(ctx, 1)), context_error);
}

TEST(Series, RightPermutabilityOnM2F4) {
    const SkewContext ctx(worked::m2f4_inner());
    Rng rng(50);
    for (int t = 0; t < 20; ++t) {
        const auto f = rng.series(ctx, 10);
        const auto sol = solve_right_permutable(ctx, f, 4, 10);
        ASSERT_TRUE(sol.has_value());
        // f X^m = X s up to X^10
        std::vector<Vec> fxm(sol->m, ctx.algebra().zero());
        fxm.insert(fxm.end(), f.coeffs.begin(), f.coeffs.end());
        fxm.resize(10);
        EXPECT_EQ(x_times_series(ctx, sol->s), TruncSeries{fxm});
    }
    // X is right regular: X s = 0 has no nonzero solutions
    EXPECT_TRUE(kernel_left_x(ctx, 6).empty());
}

TEST(Series, XIsRightRegular) {
    // X s = 0 forces s_0 in ker delta with sigma(s_0) in im delta; on these contexts that
    // leaves only s = 0
    for (const auto& name : {"f4c5-group", "fyz-quotient"}) {
        const SkewContext ctx(worked::by_name(name));
        EXPECT_TRUE(kernel_left_x(ctx, 6).empty()) << name;
    }
}

}  // namespace
