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
 * @file skewlaurent.hpp
 * @brief Truncated skew Laurent series A((X; sigma, delta)).
 *
 * An element is known modulo X^hi: coefficients c_ord..c_{hi-1} are stored and everything
 * below ord is zero. Needs sigma invertible and both delta and delta' = -delta sigma^{-1}
 * nilpotent. X^{-1} commutes past a coefficient as
 *   X^{-1} a = sum_{k=0}^{m'-1} sigma' delta'^k(a) X^{-1-k},   sigma' = sigma^{-1},
 * so it pushes information m' - 1 places down; every operation here keeps the window
 * length and reports the resulting hi.
 */

#ifndef SKL_SKEWLAURENT_HPP
#define SKL_SKEWLAURENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "skewmap.hpp"
#include "skewpoly.hpp"
#include "skewseries.hpp"

namespace skl {

template <class Side>
struct BasicLaurent {
    std::int64_t ord = 0;
    std::vector<Vec> coeffs;

    BasicLaurent() = default;
    BasicLaurent(std::int64_t o, std::vector<Vec> c) : ord(o), coeffs(std::move(c)) { normalize(); }

    /// Exclusive end of the known window.
    std::int64_t hi() const noexcept { return ord + static_cast<std::int64_t>(coeffs.size()); }
    std::size_t window() const noexcept { return coeffs.size(); }
    bool is_zero() const noexcept { return coeffs.empty(); }

    /// Coefficient of X^e for e < hi (zero below ord).
    Vec at(std::int64_t e, std::size_t dim) const {
        if (e >= hi()) throw precision_error("coefficient of X^" + std::to_string(e) + " is beyond the known window");
        if (e < ord) return Vec(dim, 0);
        return coeffs[static_cast<std::size_t>(e - ord)];
    }

    /// Leading zeros are dropped; the zero element keeps ord == hi.
    void normalize() {
        std::size_t z = 0;
        while (z < coeffs.size() && skl::is_zero(coeffs[z])) ++z;
        if (z == 0) return;
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(z));
        ord += static_cast<std::int64_t>(z);
    }

    /// Zero known mod X^hi.
    static BasicLaurent zero_mod(std::int64_t hi) {
        BasicLaurent z;
        z.ord = hi;
        return z;
    }

    friend bool operator==(const BasicLaurent&, const BasicLaurent&) = default;
};

using TruncLaurent = BasicLaurent<ring_side>;

/// s X^ord as a Laurent series with window s.prec().
template <class Side>
BasicLaurent<Side> to_laurent(const BasicSeries<Side>& s, std::int64_t ord = 0) {
    return BasicLaurent<Side>(ord, s.coeffs);
}

/// X^{-ord} s as a series of precision window(); s must be nonzero or the result is empty.
template <class Side>
BasicSeries<Side> series_part(const BasicLaurent<Side>& s) {
    return BasicSeries<Side>{s.coeffs};
}

/// The polynomial f known mod X^hi.
inline TruncLaurent to_laurent(const SkewContext& ctx, const SkewPoly& f, std::int64_t hi) {
    if (hi < 0) throw precision_error("a polynomial window must start at X^0");
    return TruncLaurent(0, to_series(ctx, f, static_cast<std::size_t>(hi)).coeffs);
}

/// Restrict to the window ending at new_hi <= hi.
template <class Side>
BasicLaurent<Side> truncate_to(const BasicLaurent<Side>& s, std::int64_t new_hi) {
    if (new_hi > s.hi()) throw precision_error("cannot widen a window from X^" + std::to_string(s.hi()));
    if (new_hi <= s.ord) return BasicLaurent<Side>::zero_mod(new_hi);
    std::vector<Vec> c(s.coeffs.begin(), s.coeffs.begin() + (new_hi - s.ord));
    return BasicLaurent<Side>(s.ord, std::move(c));
}

/// Same class on the common window?
template <class Side>
bool agree_on(const BasicLaurent<Side>& a, const BasicLaurent<Side>& b, std::int64_t hi, std::size_t dim) {
    if (hi > a.hi() || hi > b.hi()) throw precision_error("comparison window exceeds a known window");
    const std::int64_t lo = std::min(a.ord, b.ord);
    for (std::int64_t e = lo; e < hi; ++e)
        if (a.at(e, dim) != b.at(e, dim)) return false;
    return true;
}

template <class Side>
BasicLaurent<Side> laurent_add(const Field& F, const BasicLaurent<Side>& a, const BasicLaurent<Side>& b,
                               std::size_t dim) {
    const std::int64_t hi = std::min(a.hi(), b.hi());
    const std::int64_t lo = std::min(a.ord, b.ord);
    if (hi <= lo) return BasicLaurent<Side>::zero_mod(hi);
    std::vector<Vec> c;
    for (std::int64_t e = lo; e < hi; ++e) c.push_back(vec_add(F, a.at(e, dim), b.at(e, dim)));
    return BasicLaurent<Side>(lo, std::move(c));
}

template <class Side>
BasicLaurent<Side> laurent_neg(const Field& F, const BasicLaurent<Side>& a) {
    BasicLaurent<Side> r = a;
    for (auto& c : r.coeffs) c = vec_neg(F, c);
    return r;
}

/// s X^l: the exponents move, the coefficients do not.
template <class Side>
BasicLaurent<Side> shift(const BasicLaurent<Side>& s, std::int64_t l) {
    BasicLaurent<Side> r = s;
    r.ord += l;
    return r;
}

/// X s, coefficient j is sigma(s_{j-1}) + delta(s_j). Same window.
inline TruncLaurent x_times(const SkewContext& ctx, const TruncLaurent& s) {
    const auto& d = ctx.derivation();
    const Field& F = ctx.field();
    const std::size_t r = ctx.dim();
    if (s.is_zero()) return s;
    std::vector<Vec> c;
    for (std::int64_t j = s.ord; j < s.hi(); ++j) {
        Vec v = d.apply_delta(s.at(j, r));
        add_into(F, v, d.apply_sigma(s.at(j - 1, r)));
        c.push_back(std::move(v));
    }
    return TruncLaurent(s.ord, std::move(c));
}

/// X^n s for n >= 0, coefficient j is sum_{k=0}^n N_k^n(s_{j-k}). Same window.
inline TruncLaurent xn_times(const SkewContext& ctx, const TruncLaurent& s, std::size_t n) {
    const Field& F = ctx.field();
    const std::size_t r = ctx.dim();
    if (s.is_zero()) return s;
    std::vector<Vec> c;
    for (std::int64_t j = s.ord; j < s.hi(); ++j) {
        Vec v(r, 0);
        for (std::size_t k = 0; k <= n && j - static_cast<std::int64_t>(k) >= s.ord; ++k)
            add_into(F, v, apply(F, ctx.N(k, n), s.at(j - static_cast<std::int64_t>(k), r)));
        c.push_back(std::move(v));
    }
    return TruncLaurent(s.ord, std::move(c));
}

/// sigma' delta'^k for k = 0..m'-1.
inline std::vector<Matrix> xinv_operators(const SkewContext& ctx) {
    const std::size_t mp = ctx.m_delta_prime();
    const auto& d = ctx.derivation();
    const Field& F = ctx.field();
    std::vector<Matrix> P;
    Matrix D = Matrix::identity(ctx.dim());
    for (std::size_t k = 0; k < mp; ++k) {
        P.push_back(mat_mul(F, *d.sigma_inv(), D));
        D = mat_mul(F, *d.delta_prime(), D);
    }
    return P;
}

/// X^{-1} s = sum_k sigma' delta'^k(s) X^{-1-k}, k = 0..m'-1, applied coefficientwise.
/// Coefficient j reads s_{j+1}..s_{j+m'}, so the window [ord - m', hi - m') is exact.
inline TruncLaurent xinv_times(const SkewContext& ctx, const TruncLaurent& s) {
    ctx.require_laurent();
    const auto P = xinv_operators(ctx);
    const std::int64_t mp = static_cast<std::int64_t>(P.size());
    const Field& F = ctx.field();
    const std::size_t r = ctx.dim();
    const std::int64_t new_hi = s.hi() - mp;
    if (s.is_zero()) return TruncLaurent::zero_mod(new_hi);
    const std::int64_t lo = s.ord - mp;
    std::vector<Vec> c;
    for (std::int64_t j = lo; j < new_hi; ++j) {
        Vec v(r, 0);
        for (std::int64_t k = 0; k < mp; ++k) {
            const std::int64_t e = j + 1 + k;
            if (e < s.ord) continue;
            add_into(F, v, apply(F, P[static_cast<std::size_t>(k)], s.at(e, r)));
        }
        c.push_back(std::move(v));
    }
    return TruncLaurent(lo, std::move(c));
}

/// X^{-n} s by n applications of X^{-1}.
inline TruncLaurent xnegn_times(const SkewContext& ctx, const TruncLaurent& s, std::size_t n) {
    TruncLaurent r = s;
    for (std::size_t i = 0; i < n; ++i) r = xinv_times(ctx, r);
    if (n == 0) ctx.require_laurent();
    return r;
}

/// X^e s for any integer e.
inline TruncLaurent xpow_times(const SkewContext& ctx, const TruncLaurent& s, std::int64_t e) {
    if (e >= 0) return xn_times(ctx, s, static_cast<std::size_t>(e));
    return xnegn_times(ctx, s, static_cast<std::size_t>(-e));
}

namespace detail {

/// s t with s = s^ X^{o_s}: move X^{o_s} across t, then one truncated series product.
/// The output window is min(P_u, floor(P_s / m)) with P_u the window of X^{o_s} t.
template <class Side, class Act>
BasicLaurent<Side> laurent_mul_impl(const SkewContext& ctx, const Act& act, const BasicLaurent<Side>& s,
                                    const TruncLaurent& t) {
    ctx.require_laurent();
    const std::size_t m = ctx.m_delta();
    const TruncLaurent u = xpow_times(ctx, t, s.ord);
    // s t = s^ u lies in X^{ord(u)} A[[X]]; for a zero u, ord(u) is its window end.
    if (s.is_zero() || u.is_zero()) return BasicLaurent<Side>::zero_mod(u.ord);
    const std::size_t N = std::min(u.window(), s.window() / m);
    const auto prod = series_mul_impl(ctx, act, BasicSeries<Side>{s.coeffs}, TruncSeries{u.coeffs}, N);
    return BasicLaurent<Side>(u.ord, prod.coeffs);
}

}  // namespace detail

inline TruncLaurent laurent_mul(const SkewContext& ctx, const TruncLaurent& s, const TruncLaurent& t) {
    check_coeffs(ctx, s.coeffs);
    check_coeffs(ctx, t.coeffs);
    return detail::laurent_mul_impl(ctx, RingActor{&ctx.algebra()}, s, t);
}

/// Which of A[X], A[[X]], A((X)) exist, with the evidence.
struct RingExistence {
    bool poly = true;
    bool series = false;
    bool laurent = false;
    std::optional<std::size_t> m_delta;
    std::optional<std::size_t> m_delta_prime;
    std::string series_witness;
    std::string laurent_witness;
};

namespace detail {

/// Why L is not nilpotent: a fixed vector of L if there is one, else a basis element
/// b with L^r(b) != 0.
inline std::string non_nilpotent_witness(const Algebra& A, const LinearMap& L, const std::string& name) {
    const Field& F = A.field();
    const std::size_t r = A.dim();
    const auto fixed = kernel(F, mat_sub(F, L, Matrix::identity(r)));
    if (!fixed.empty()) {
        const std::string x = A.to_string(fixed.front());
        return name + "(" + x + ") = " + x;
    }
    const Matrix Lr = mat_pow(F, L, r);
    for (std::size_t j = 0; j < r; ++j) {
        const auto img = apply(F, Lr, A.basis(j));
        if (!skl::is_zero(img))
            return name + "^" + std::to_string(r) + "(" + A.labels()[j] + ") = " + A.to_string(img) + " != 0";
    }
    return name + " is not nilpotent";
}

}  // namespace detail

inline RingExistence laurent_ring_exists(const SkewDerivation& d) {
    RingExistence e;
    e.m_delta = d.m_delta();
    e.m_delta_prime = d.m_delta_prime();
    e.series = e.m_delta.has_value();
    if (!e.series) e.series_witness = detail::non_nilpotent_witness(d.algebra(), d.delta(), "delta");
    if (!d.sigma_invertible()) {
        e.laurent_witness = "sigma is not invertible";
    } else if (!e.m_delta_prime) {
        e.laurent_witness = detail::non_nilpotent_witness(d.algebra(), *d.delta_prime(), "delta'");
    } else if (!e.series) {
        e.laurent_witness = e.series_witness;
    }
    e.laurent = e.series && d.sigma_invertible() && e.m_delta_prime.has_value();
    return e;
}

}  // namespace skl

#endif
