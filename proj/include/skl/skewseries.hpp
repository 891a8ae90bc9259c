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

/**
 * @file skewseries.hpp
 * @brief Truncated skew power series A[[X; sigma, delta]] mod X^N.
 *
 * With delta^m = 0 we have N_i^k = 0 once k >= (i+1)m, so coefficient n of st only
 * depends on s_0..s_{(n+1)m-1} and t_0..t_n:
 *   (st)_n = [ (sum_{i<=q} s_i X^i)(sum_{i<=n} t_i X^i) ]_n,   q = (n+1)m - 1.
 *
 * Precision contract: an output of precision N reads s up to index N*m - 1 and t up to
 * N - 1. Asking for more than the inputs support throws precision_error.
 */

#ifndef SKL_SKEWSERIES_HPP
#define SKL_SKEWSERIES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "skewmap.hpp"
#include "skewpoly.hpp"

namespace skl {

/// Residue class mod X^prec: exactly prec stored coefficients.
template <class Side>
struct BasicSeries {
    std::vector<Vec> coeffs;

    std::size_t prec() const noexcept { return coeffs.size(); }
    bool is_zero() const noexcept {
        for (const auto& c : coeffs)
            if (!skl::is_zero(c)) return false;
        return true;
    }
    friend bool operator==(const BasicSeries&, const BasicSeries&) = default;
};

using TruncSeries = BasicSeries<ring_side>;

/// (n+1) m - 1
inline std::size_t q_bound(const SkewContext& ctx, std::size_t n) { return (n + 1) * ctx.m_delta() - 1; }

/// The polynomial f read mod X^prec.
template <class Side>
BasicSeries<Side> to_series(const BasicPoly<Side>& f, std::size_t prec, std::size_t coeff_dim) {
    BasicSeries<Side> s;
    s.coeffs.assign(prec, Vec(coeff_dim, 0));
    for (std::size_t i = 0; i < std::min(prec, f.size()); ++i) s.coeffs[i] = f.coeffs[i];
    return s;
}

inline TruncSeries to_series(const SkewContext& ctx, const SkewPoly& f, std::size_t prec) {
    return to_series(f, prec, ctx.dim());
}

template <class Side>
BasicPoly<Side> to_poly(const BasicSeries<Side>& s) {
    return BasicPoly<Side>(s.coeffs);
}

template <class Side>
BasicSeries<Side> truncate(const BasicSeries<Side>& s, std::size_t prec) {
    if (prec > s.prec())
        throw precision_error("cannot raise precision from " + std::to_string(s.prec()) + " to " + std::to_string(prec));
    BasicSeries<Side> r;
    r.coeffs.assign(s.coeffs.begin(), s.coeffs.begin() + static_cast<std::ptrdiff_t>(prec));
    return r;
}

template <class Side>
BasicSeries<Side> series_add(const Field& F, const BasicSeries<Side>& a, const BasicSeries<Side>& b) {
    const std::size_t n = std::min(a.prec(), b.prec());
    BasicSeries<Side> r;
    for (std::size_t i = 0; i < n; ++i) r.coeffs.push_back(vec_add(F, a.coeffs[i], b.coeffs[i]));
    return r;
}

template <class Side>
BasicSeries<Side> series_sub(const Field& F, const BasicSeries<Side>& a, const BasicSeries<Side>& b) {
    const std::size_t n = std::min(a.prec(), b.prec());
    BasicSeries<Side> r;
    for (std::size_t i = 0; i < n; ++i) r.coeffs.push_back(vec_sub(F, a.coeffs[i], b.coeffs[i]));
    return r;
}

/// Largest output precision series_mul(s, t, .) can deliver.
inline std::size_t series_mul_max_prec(const SkewContext& ctx, std::size_t s_prec, std::size_t t_prec) {
    return std::min(t_prec, s_prec / ctx.m_delta());
}

namespace detail {

template <class Side, class Act>
BasicSeries<Side> series_mul_impl(const SkewContext& ctx, const Act& act, const BasicSeries<Side>& s,
                                  const TruncSeries& t, std::size_t N) {
    const std::size_t m = ctx.m_delta();
    if (N == 0) return {};
    const std::size_t need_s = N * m;  // q_bound(N-1) + 1
    if (s.prec() < need_s)
        throw precision_error("series product to precision " + std::to_string(N) + " reads " + std::to_string(need_s) +
                              " coefficients of the left factor, only " + std::to_string(s.prec()) + " are known");
    if (t.prec() < N)
        throw precision_error("series product to precision " + std::to_string(N) + " reads " + std::to_string(N) +
                              " coefficients of the right factor, only " + std::to_string(t.prec()) + " are known");
    BasicSeries<Side> r;
    r.coeffs.assign(N, Vec(act.dim(), 0));
    // Terms g_k N_i^k(t_j) with k >= (i+1)m vanish, so reading s up to N*m - 1 is exact.
    skew_product_accumulate(ctx, act, std::span<const Vec>(s.coeffs), need_s,
                            std::span<const Vec>(t.coeffs.data(), N), r.coeffs);
    return r;
}

}  // namespace detail

/// st mod X^N.
inline TruncSeries series_mul(const SkewContext& ctx, const TruncSeries& s, const TruncSeries& t, std::size_t N) {
    check_coeffs(ctx, s.coeffs);
    check_coeffs(ctx, t.coeffs);
    return detail::series_mul_impl(ctx, RingActor{&ctx.algebra()}, s, t, N);
}

/// st at the largest precision the inputs support.
inline TruncSeries series_mul(const SkewContext& ctx, const TruncSeries& s, const TruncSeries& t) {
    return series_mul(ctx, s, t, series_mul_max_prec(ctx, s.prec(), t.prec()));
}

/// Coefficient n of st computed with an explicit cut-off q for s (q >= q_bound(n) gives
/// the same value). Used to exhibit q-independence.
inline Vec series_mul_coeff_with_q(const SkewContext& ctx, const TruncSeries& s, const TruncSeries& t, std::size_t n,
                                   std::size_t q) {
    if (s.prec() <= q || t.prec() <= n) throw precision_error("coefficient window exceeds stored coefficients");
    std::vector<Vec> out(n + 1, ctx.algebra().zero());
    detail::skew_product_accumulate(ctx, RingActor{&ctx.algebra()}, std::span<const Vec>(s.coeffs), q + 1,
                                    std::span<const Vec>(t.coeffs.data(), n + 1), out);
    return out[n];
}

namespace detail {

template <class Side, class Act>
BasicSeries<Side> series_times_scalar_impl(const SkewContext& ctx, const Act& act, const BasicSeries<Side>& s,
                                           std::span<const Elem> a, std::size_t N) {
    const std::size_t m = ctx.m_delta();
    if (s.prec() < N * m)
        throw precision_error("s*a to precision " + std::to_string(N) + " reads " + std::to_string(N * m) +
                              " coefficients, only " + std::to_string(s.prec()) + " are known");
    const Field& F = ctx.field();
    BasicSeries<Side> r;
    r.coeffs.assign(N, Vec(act.dim(), 0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i; j <= (i + 1) * m - 1; ++j) {
            if (skl::is_zero(s.coeffs[j])) continue;
            const Vec n = apply(F, ctx.N(i, j), a);
            if (!skl::is_zero(n)) add_into(F, r.coeffs[i], act(s.coeffs[j], n));
        }
    return r;
}

}  // namespace detail

/// (sum s_i X^i) a = sum_i ( sum_{j=i}^{(i+1)m-1} s_j N_i^j(a) ) X^i, output precision s.prec()/m.
inline TruncSeries series_times_scalar(const SkewContext& ctx, const TruncSeries& s, std::span<const Elem> a) {
    check_coeffs(ctx, s.coeffs);
    ctx.algebra().check(a);
    return detail::series_times_scalar_impl(ctx, RingActor{&ctx.algebra()}, s, a, s.prec() / ctx.m_delta());
}

/// X s = sum_i (sigma(s_{i-1}) + delta(s_i)) X^i, same precision.
inline TruncSeries x_times_series(const SkewContext& ctx, const TruncSeries& s) {
    const auto& d = ctx.derivation();
    const Field& F = ctx.field();
    TruncSeries r;
    for (std::size_t i = 0; i < s.prec(); ++i) {
        Vec c = d.apply_delta(s.coeffs[i]);
        if (i > 0) add_into(F, c, d.apply_sigma(s.coeffs[i - 1]));
        r.coeffs.push_back(std::move(c));
    }
    return r;
}

/// X^n f = g X^k.
struct OreWitness {
    std::size_t n = 0;
    std::size_t k = 1;
    SkewPoly g;
};

/// Left Ore condition for Sigma = {X^n}: returns n and g with X^n f = g X. With f = f_0 + hX
/// and delta^n(f_0) = 0, X^n f = (X^n h + sum_{k=1}^n N_k^n(f_0) X^{k-1}) X.
inline OreWitness ore_left(const SkewContext& ctx, const SkewPoly& f) {
    check_coeffs(ctx, f.coeffs);
    ctx.m_delta();
    const Field& F = ctx.field();
    if (f.is_zero()) return {0, 1, {}};
    const Vec& f0 = f.coeffs[0];
    std::size_t n = 0;
    while (!skl::is_zero(apply(F, ctx.N(0, n), f0))) ++n;
    SkewPoly h(std::vector<Vec>(f.coeffs.begin() + 1, f.coeffs.end()));
    SkewPoly g = xn_times(ctx, h, n);
    std::vector<Vec> tail(n, ctx.algebra().zero());
    for (std::size_t k = 1; k <= n; ++k) tail[k - 1] = apply(F, ctx.N(k, n), f0);
    g = poly_add(F, g, SkewPoly(std::move(tail)));
    return {n, 1, std::move(g)};
}

/// X^{n'} f = g' X^k by iterating the one-step witness.
inline OreWitness ore_left_power(const SkewContext& ctx, const SkewPoly& f, std::size_t k) {
    OreWitness w{0, 0, f};
    for (std::size_t step = 0; step < k; ++step) {
        const auto w1 = ore_left(ctx, w.g);
        w.n += w1.n;
        w.g = w1.g;
        w.k += 1;
    }
    return w;
}

/// The same witness for a truncated series: X^n s = g X mod X^{prec(g)}.
/// X^n h only sees h up to its own precision, so g has precision s.prec() - 1.
struct SeriesOreWitness {
    std::size_t n = 0;
    TruncSeries g;
};

inline SeriesOreWitness ore_left(const SkewContext& ctx, const TruncSeries& s) {
    check_coeffs(ctx, s.coeffs);
    ctx.m_delta();
    if (s.prec() == 0) throw precision_error("ore witness of a series with no known coefficients");
    const Field& F = ctx.field();
    const std::size_t P = s.prec() - 1;
    const Vec& f0 = s.coeffs[0];
    std::size_t n = 0;
    while (!skl::is_zero(apply(F, ctx.N(0, n), f0))) ++n;
    TruncSeries g;
    g.coeffs.assign(P, ctx.algebra().zero());
    // (X^n h)_i = sum_k N_k^n(h_{i-k}); window of h is P.
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t k = 0; k <= std::min(i, n); ++k) add_into(F, g.coeffs[i], apply(F, ctx.N(k, n), s.coeffs[i - k + 1]));
    for (std::size_t k = 1; k <= n && k - 1 < P; ++k) add_into(F, g.coeffs[k - 1], apply(F, ctx.N(k, n), f0));
    return {n, std::move(g)};
}

/// f X^m = X s to precision N.
struct RightPermutation {
    std::size_t m = 0;
    TruncSeries s;
};

namespace detail {

/// Matrix of s -> (X s)_{0..L-1} on unknowns s_0..s_{L-1} (block r x r).
inline Matrix x_left_system(const SkewContext& ctx, std::size_t L) {
    const std::size_t r = ctx.dim();
    const auto& d = ctx.derivation();
    Matrix E(L * r, L * r);
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) {
                E(i * r + a, i * r + b) = d.delta()(a, b);
                if (i > 0) E(i * r + a, (i - 1) * r + b) = d.sigma()(a, b);
            }
    return E;
}

}  // namespace detail

/// Smallest m <= n_max with f X^m = X s solvable mod X^N (the triangular system
/// sigma(s_{i-1}) + delta(s_i) = f_{i-m}), free unknowns set to zero. Nothing if none.
inline std::optional<RightPermutation> solve_right_permutable(const SkewContext& ctx, const TruncSeries& f,
                                                              std::size_t n_max, std::size_t N) {
    check_coeffs(ctx, f.coeffs);
    const std::size_t r = ctx.dim();
    const Matrix E = detail::x_left_system(ctx, N);
    for (std::size_t m = 0; m <= n_max; ++m) {
        if (N > m && f.prec() < N - m)
            throw precision_error("right permutation to precision " + std::to_string(N) + " with m = " + std::to_string(m) +
                                  " reads " + std::to_string(N - m) + " coefficients of f");
        Vec rhs(N * r, 0);
        for (std::size_t i = m; i < N; ++i)
            for (std::size_t a = 0; a < r; ++a) rhs[i * r + a] = f.coeffs[i - m][a];
        const auto x = solve(ctx.field(), E, rhs);
        if (!x) continue;
        RightPermutation out{m, {}};
        for (std::size_t i = 0; i < N; ++i) out.s.coeffs.emplace_back(x->begin() + i * r, x->begin() + (i + 1) * r);
        return out;
    }
    return std::nullopt;
}

/// F-basis of the first N coefficients of series s with X s = 0. The equations are taken
/// r = dim A steps further than N and then projected, so a coefficient left free only by
/// truncation does not show up. Empty basis: X is right regular up to precision N.
inline std::vector<TruncSeries> kernel_left_x(const SkewContext& ctx, std::size_t N) {
    const std::size_t r = ctx.dim();
    const std::size_t L = N + r;
    const Field& F = ctx.field();
    const auto sol = kernel(F, detail::x_left_system(ctx, L));
    if (sol.empty() || N == 0) return {};
    Matrix P(sol.size(), N * r);
    for (std::size_t v = 0; v < sol.size(); ++v)
        for (std::size_t c = 0; c < N * r; ++c) P(v, c) = sol[v][c];
    const auto piv = detail::rref(F, P);
    std::vector<TruncSeries> out;
    for (std::size_t v = 0; v < piv.size(); ++v) {
        TruncSeries s;
        for (std::size_t i = 0; i < N; ++i) {
            const auto row = P.row(v);
            s.coeffs.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(i * r),
                                  row.begin() + static_cast<std::ptrdiff_t>((i + 1) * r));
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace skl

#endif
