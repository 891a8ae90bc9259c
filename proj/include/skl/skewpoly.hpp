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
 * @file skewpoly.hpp
 * @brief The skew polynomial ring A[X; sigma, delta] in left-coefficient form.
 *
 * f = sum_i f_i X^i is stored as its list of left coefficients. Products use
 *   (sum_k g_k X^k) f = sum_i ( sum_{k >= i} g_k N_i^k(f) ) X^i,
 * where N_i^k acts coefficientwise on f. The same kernel serves right modules
 * F^n[X] over A[X; sigma, delta]: only the left action "g_k * (.)" changes, which is
 * why the containers are templated on the coefficient side.
 */

#ifndef SKL_SKEWPOLY_HPP
#define SKL_SKEWPOLY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "skewmap.hpp"

namespace skl {

/// Coefficients in the algebra A.
struct ring_side {};
/// Coefficients in a right A-module F^n.
struct module_side {};

/// Finitely supported sum_i c_i X^i. Normalized: the last stored coefficient is nonzero,
/// the zero polynomial is the empty list.
template <class Side>
struct BasicPoly {
    std::vector<Vec> coeffs;

    BasicPoly() = default;
    explicit BasicPoly(std::vector<Vec> c) : coeffs(std::move(c)) { normalize(); }

    void normalize() {
        while (!coeffs.empty() && skl::is_zero(coeffs.back())) coeffs.pop_back();
    }
    bool is_zero() const noexcept { return coeffs.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs.size()) - 1; }
    std::size_t size() const noexcept { return coeffs.size(); }

    friend bool operator==(const BasicPoly&, const BasicPoly&) = default;
};

using SkewPoly = BasicPoly<ring_side>;

/// Left action of algebra coefficients on algebra elements: g * x.
struct RingActor {
    const Algebra* A;
    Vec operator()(std::span<const Elem> g, std::span<const Elem> x) const { return A->mul(g, x); }
    std::size_t dim() const noexcept { return A->dim(); }
};

namespace detail {

/// out[i + j] += act(g[k], N_i^k(f[j])) for all i <= k < g_len, j < f.size(), i + j < out.size().
template <class Act>
void skew_product_accumulate(const SkewContext& ctx, const Act& act, std::span<const Vec> g, std::size_t g_len,
                             std::span<const Vec> f, std::vector<Vec>& out) {
    const Field& F = ctx.field();
    const std::size_t out_len = out.size();
    g_len = std::min(g_len, g.size());
    for (std::size_t j = 0; j < f.size() && j < out_len; ++j) {
        if (skl::is_zero(f[j])) continue;
        for (std::size_t k = 0; k < g_len; ++k) {
            if (skl::is_zero(g[k])) continue;
            for (std::size_t i = 0; i <= k && i + j < out_len; ++i) {
                const Vec n = apply(F, ctx.N(i, k), f[j]);
                if (skl::is_zero(n)) continue;
                add_into(F, out[i + j], act(g[k], n));
            }
        }
    }
}

}  // namespace detail

inline void check_coeffs(const SkewContext& ctx, std::span<const Vec> c) {
    for (const auto& x : c) ctx.algebra().check(x);
}

inline SkewPoly constant(const SkewContext& ctx, std::span<const Elem> a) {
    ctx.algebra().check(a);
    return SkewPoly({Vec(a.begin(), a.end())});
}

/// a X^n
inline SkewPoly monomial(const SkewContext& ctx, std::span<const Elem> a, std::size_t n) {
    ctx.algebra().check(a);
    std::vector<Vec> c(n + 1, ctx.algebra().zero());
    c[n] = Vec(a.begin(), a.end());
    return SkewPoly(std::move(c));
}

inline SkewPoly x_power(const SkewContext& ctx, std::size_t n) { return monomial(ctx, ctx.algebra().unit(), n); }

template <class Side>
BasicPoly<Side> poly_add(const Field& F, const BasicPoly<Side>& a, const BasicPoly<Side>& b) {
    const std::size_t n = std::max(a.size(), b.size());
    const std::size_t d = !a.is_zero() ? a.coeffs[0].size() : !b.is_zero() ? b.coeffs[0].size() : 0;
    std::vector<Vec> c(n, Vec(d, 0));
    for (std::size_t i = 0; i < a.size(); ++i) add_into(F, c[i], a.coeffs[i]);
    for (std::size_t i = 0; i < b.size(); ++i) add_into(F, c[i], b.coeffs[i]);
    return BasicPoly<Side>(std::move(c));
}

template <class Side>
BasicPoly<Side> poly_neg(const Field& F, const BasicPoly<Side>& a) {
    std::vector<Vec> c;
    for (const auto& x : a.coeffs) c.push_back(vec_neg(F, x));
    return BasicPoly<Side>(std::move(c));
}

template <class Side>
BasicPoly<Side> poly_sub(const Field& F, const BasicPoly<Side>& a, const BasicPoly<Side>& b) {
    return poly_add(F, a, poly_neg(F, b));
}

/// Product in A[X; sigma, delta] by the N-operator formula.
inline SkewPoly poly_mul(const SkewContext& ctx, const SkewPoly& g, const SkewPoly& f) {
    check_coeffs(ctx, g.coeffs);
    check_coeffs(ctx, f.coeffs);
    if (g.is_zero() || f.is_zero()) return {};
    std::vector<Vec> out(g.size() + f.size() - 1, ctx.algebra().zero());
    detail::skew_product_accumulate(ctx, RingActor{&ctx.algebra()}, g.coeffs, g.size(), f.coeffs, out);
    return SkewPoly(std::move(out));
}

/// L(f) = sum_i L(f_i) X^i
inline SkewPoly apply_coeffwise(const SkewContext& ctx, const LinearMap& L, const SkewPoly& f) {
    std::vector<Vec> c;
    for (const auto& x : f.coeffs) c.push_back(apply(ctx.field(), L, x));
    return SkewPoly(std::move(c));
}

/// X^n f = sum_k N_k^n(f) X^k
inline SkewPoly xn_times(const SkewContext& ctx, const SkewPoly& f, std::size_t n) {
    check_coeffs(ctx, f.coeffs);
    if (f.is_zero()) return {};
    const Field& F = ctx.field();
    std::vector<Vec> out(f.size() + n, ctx.algebra().zero());
    for (std::size_t k = 0; k <= n; ++k) {
        const Matrix& Nk = ctx.N(k, n);
        for (std::size_t j = 0; j < f.size(); ++j) add_into(F, out[k + j], apply(F, Nk, f.coeffs[j]));
    }
    return SkewPoly(std::move(out));
}

/// Left-coefficient form of sum_i X^i a_i: coefficient i is sum_{j >= i} N_i^j(a_j).
inline SkewPoly left_from_right(const SkewContext& ctx, std::span<const Vec> right_coeffs) {
    check_coeffs(ctx, right_coeffs);
    const Field& F = ctx.field();
    std::vector<Vec> out(right_coeffs.size(), ctx.algebra().zero());
    for (std::size_t j = 0; j < right_coeffs.size(); ++j) {
        if (skl::is_zero(right_coeffs[j])) continue;
        for (std::size_t i = 0; i <= j; ++i) add_into(F, out[i], apply(F, ctx.N(i, j), right_coeffs[j]));
    }
    return SkewPoly(std::move(out));
}

/// Right coefficients b_i with f = sum_i X^i b_i. Needs sigma invertible: the top
/// coefficient satisfies f_d = sigma^d(b_d), and lower ones follow by peeling X^d b_d off.
inline std::vector<Vec> right_from_left(const SkewContext& ctx, const SkewPoly& f) {
    check_coeffs(ctx, f.coeffs);
    const auto& d = ctx.derivation();
    if (!d.sigma_invertible()) throw context_error("right coefficients need an invertible sigma");
    const Field& F = ctx.field();
    std::vector<Vec> b(f.size(), ctx.algebra().zero());
    std::vector<Vec> residual = f.coeffs;
    for (std::size_t i = f.size(); i-- > 0;) {
        Vec bi = residual[i];
        for (std::size_t t = 0; t < i; ++t) bi = apply(F, *d.sigma_inv(), bi);
        for (std::size_t l = 0; l <= i; ++l) {
            const Vec term = apply(F, ctx.N(l, i), bi);
            residual[l] = vec_sub(F, residual[l], term);
        }
        b[i] = std::move(bi);
    }
    return b;
}

/// sum_i a f_i X^i, i.e. the product a * f with a in A on the left.
inline SkewPoly scale_left(const SkewContext& ctx, std::span<const Elem> a, const SkewPoly& f) {
    std::vector<Vec> c;
    for (const auto& x : f.coeffs) c.push_back(ctx.algebra().mul(a, x));
    return SkewPoly(std::move(c));
}

}  // namespace skl

#endif
