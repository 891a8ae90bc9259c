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
 * @file modact.hpp
 * @brief Right A-modules F^n and the induced actions on F^n[X], F^n[[X]], F^n((X)).
 *
 * Row convention: v . a = v R(a) with R(a) = sum_j a_j R(a_j). A module element
 * sum m_i X^i times a ring element uses the ring formulas with "g_k * x" replaced by
 * "m_k . x".
 */

#ifndef SKL_MODACT_HPP
#define SKL_MODACT_HPP

#include <memory>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "skewlaurent.hpp"
#include "skewmap.hpp"
#include "skewpoly.hpp"
#include "skewseries.hpp"

namespace skl {

/// F^n with matrices R(a_j), one per basis element of A.
class RightModuleSpec {
   public:
    RightModuleSpec(std::shared_ptr<const Algebra> A, std::size_t n, std::vector<Matrix> action)
        : A_(std::move(A)), n_(n), action_(std::move(action)) {
        if (action_.size() != A_->dim())
            throw dimension_error("module action needs " + std::to_string(A_->dim()) + " matrices, got " +
                                  std::to_string(action_.size()));
        for (const auto& R : action_)
            if (R.rows() != n_ || R.cols() != n_) throw dimension_error("action matrices must be " + std::to_string(n_) + "x" + std::to_string(n_));
    }

    const Algebra& algebra() const noexcept { return *A_; }
    const std::shared_ptr<const Algebra>& algebra_ptr() const noexcept { return A_; }
    const Field& field() const noexcept { return A_->field(); }
    std::size_t n() const noexcept { return n_; }
    const std::vector<Matrix>& action() const noexcept { return action_; }

    /// R(x)
    Matrix matrix_of(std::span<const Elem> x) const {
        A_->check(x);
        const Field& F = field();
        Matrix M(n_, n_);
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] == 0) continue;
            for (std::size_t a = 0; a < n_; ++a)
                for (std::size_t b = 0; b < n_; ++b)
                    if (action_[j](a, b) != 0) M(a, b) = F.add(M(a, b), F.mul(x[j], action_[j](a, b)));
        }
        return M;
    }

    /// v . x
    Vec act(std::span<const Elem> v, std::span<const Elem> x) const {
        if (v.size() != n_) throw dimension_error("module vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(n_));
        const Field& F = field();
        Vec r(n_, 0);
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] == 0) continue;
            const Vec vj = row_apply(F, v, action_[j]);
            axpy(F, r, x[j], vj);
        }
        return r;
    }

   private:
    std::shared_ptr<const Algebra> A_;
    std::size_t n_;
    std::vector<Matrix> action_;
};

/// m_k . x on module coefficients.
struct ModuleActor {
    const RightModuleSpec* M;
    Vec operator()(std::span<const Elem> v, std::span<const Elem> x) const { return M->act(v, x); }
    std::size_t dim() const noexcept { return M->n(); }
};

struct ModuleReport {
    bool valid = true;
    std::vector<std::string> failures;
};

/// R(1) = I and R(a_i a_j) = R(a_i) R(a_j) on every basis pair.
inline ModuleReport module_verify(const RightModuleSpec& M) {
    const Algebra& A = M.algebra();
    const Field& F = A.field();
    ModuleReport rep;
    if (M.matrix_of(A.unit()) != Matrix::identity(M.n())) {
        rep.valid = false;
        rep.failures.push_back("R(1) is not the identity");
    }
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            if (M.matrix_of(A.product(i, j)) != mat_mul(F, M.action()[i], M.action()[j])) {
                rep.valid = false;
                rep.failures.push_back("R(" + A.labels()[i] + "*" + A.labels()[j] + ") != R(" + A.labels()[i] + ")R(" +
                                       A.labels()[j] + ")");
            }
    return rep;
}

/// A over itself: R(a_j)[i][l] = c[i][j][l], i.e. a_i . a_j = a_i a_j.
inline RightModuleSpec regular_module(std::shared_ptr<const Algebra> A) {
    const std::size_t r = A->dim();
    std::vector<Matrix> act;
    for (std::size_t j = 0; j < r; ++j) {
        Matrix R(r, r);
        for (std::size_t i = 0; i < r; ++i) {
            const auto& p = A->product(i, j);
            for (std::size_t l = 0; l < r; ++l) R(i, l) = p[l];
        }
        act.push_back(std::move(R));
    }
    return RightModuleSpec(std::move(A), r, std::move(act));
}

/// Every basis element acting as the identity. A module only when each a_i a_j has
/// coordinate sum 1 (e.g. group algebras); module_verify says so.
inline RightModuleSpec trivial_action_module(std::shared_ptr<const Algebra> A, std::size_t n) {
    std::vector<Matrix> act(A->dim(), Matrix::identity(n));
    return RightModuleSpec(std::move(A), n, std::move(act));
}

/// Row vectors K^n under M_n(K). A may be matrix_algebra(K, n) or its restriction to
/// the prime field, in which case K^n is read as F^{nk} (coordinate i*k + g is the
/// coefficient of x^g in entry i).
inline RightModuleSpec matrix_row_module(std::shared_ptr<const Algebra> A, std::size_t n) {
    const auto& res = A->restriction();
    const Field& K = res ? *res->ext : A->field();
    const std::size_t k = res ? K.k() : 1;
    if ((res ? A->dim() / k : A->dim()) != n * n) throw dimension_error("algebra is not M_" + std::to_string(n));
    const Field& F = A->field();
    std::vector<Matrix> act(A->dim(), Matrix(n * k, n * k));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t e = 0; e < k; ++e) {
                const std::size_t j = (a * n + b) * k + e;  // basis element x^e E_ab
                Matrix& R = act[j];
                // (x^g at position a) . x^e E_ab = x^{e+g} at position b
                for (std::size_t g = 0; g < k; ++g) {
                    const auto digits =
                        res ? K.coeffs(K.pow(K.generator(), static_cast<std::int64_t>(e + g))) : std::vector<std::uint32_t>{1};
                    for (std::size_t h = 0; h < k; ++h) R(a * k + g, b * k + h) = F.from_int(digits[h]);
                }
            }
    return RightModuleSpec(std::move(A), n * k, std::move(act));
}

using VecPoly = BasicPoly<module_side>;
using VecSeries = BasicSeries<module_side>;
using VecLaurent = BasicLaurent<module_side>;

inline void check_module_coeffs(const RightModuleSpec& M, std::span<const Vec> c) {
    for (const auto& v : c)
        if (v.size() != M.n()) throw dimension_error("module coefficient of length " + std::to_string(v.size()) + ", expected " + std::to_string(M.n()));
}

inline void check_compatible(const RightModuleSpec& M, const SkewContext& ctx) {
    if (M.algebra_ptr() != ctx.derivation().algebra_ptr() && M.algebra_ptr()->labels() != ctx.algebra().labels())
        throw mismatch_error("module and skew context live over different algebras");
}

/// (sum m_i X^i)(sum f_j X^j) = sum_{i,j} (sum_k m_k N_i^k(f_j)) X^{i+j}
inline VecPoly vecpoly_times_ring(const SkewContext& ctx, const RightModuleSpec& M, const VecPoly& v, const SkewPoly& f) {
    check_compatible(M, ctx);
    check_module_coeffs(M, v.coeffs);
    check_coeffs(ctx, f.coeffs);
    if (v.is_zero() || f.is_zero()) return {};
    std::vector<Vec> out(v.size() + f.size() - 1, Vec(M.n(), 0));
    detail::skew_product_accumulate(ctx, ModuleActor{&M}, v.coeffs, v.size(), f.coeffs, out);
    return VecPoly(std::move(out));
}

/// v . a for a constant a.
inline VecPoly vecpoly_times_scalar(const SkewContext& ctx, const RightModuleSpec& M, const VecPoly& v,
                                    std::span<const Elem> a) {
    return vecpoly_times_ring(ctx, M, v, constant(ctx, a));
}

inline VecSeries vecseries_times_ring(const SkewContext& ctx, const RightModuleSpec& M, const VecSeries& s,
                                      const TruncSeries& t, std::size_t N) {
    check_compatible(M, ctx);
    check_module_coeffs(M, s.coeffs);
    check_coeffs(ctx, t.coeffs);
    return detail::series_mul_impl(ctx, ModuleActor{&M}, s, t, N);
}

inline VecSeries vecseries_times_scalar(const SkewContext& ctx, const RightModuleSpec& M, const VecSeries& s,
                                        std::span<const Elem> a) {
    check_compatible(M, ctx);
    check_module_coeffs(M, s.coeffs);
    return detail::series_times_scalar_impl(ctx, ModuleActor{&M}, s, a, s.prec() / ctx.m_delta());
}

/// s t in F^n((X)) for t in A((X)).
inline VecLaurent veclaurent_times_ring(const SkewContext& ctx, const RightModuleSpec& M, const VecLaurent& s,
                                        const TruncLaurent& t) {
    check_compatible(M, ctx);
    check_module_coeffs(M, s.coeffs);
    check_coeffs(ctx, t.coeffs);
    return detail::laurent_mul_impl(ctx, ModuleActor{&M}, s, t);
}

/// s a for a in A, written out directly: with s = s^ X^{o}, o = -n0 <= 0,
///   s a = sum_k sum_i sum_j s^_j N_i^j(sigma'delta'^{k_1} ... sigma'delta'^{k_n0}(a)) X^{i - n0 - k},
/// the inner sum over compositions k_1 + ... + k_n0 = k with 0 <= k_l < m'. For o > 0 the
/// N-operators of X^o a are used instead. Output window: floor(window(s) / m).
inline VecLaurent veclaurent_times_scalar(const SkewContext& ctx, const RightModuleSpec& M, const VecLaurent& s,
                                          std::span<const Elem> a) {
    check_compatible(M, ctx);
    check_module_coeffs(M, s.coeffs);
    ctx.algebra().check(a);
    ctx.require_laurent();
    const Field& F = ctx.field();
    const std::size_t m = ctx.m_delta();
    const std::size_t r = ctx.dim();
    // Expansion X^{o} a = sum_e b_e X^e with finitely many terms.
    std::vector<std::pair<std::int64_t, Vec>> terms;
    if (s.ord >= 0) {
        const std::size_t n = static_cast<std::size_t>(s.ord);
        for (std::size_t i = 0; i <= n; ++i) {
            Vec b = apply(F, ctx.N(i, n), a);
            if (!skl::is_zero(b)) terms.emplace_back(static_cast<std::int64_t>(i), std::move(b));
        }
    } else {
        const auto P = xinv_operators(ctx);
        const std::size_t n0 = static_cast<std::size_t>(-s.ord);
        // layer[k] = sum over compositions of k into the first l parts, applied to a
        std::vector<Vec> layer{Vec(a.begin(), a.end())};
        for (std::size_t l = 0; l < n0; ++l) {
            std::vector<Vec> next(layer.size() + P.size() - 1, Vec(r, 0));
            for (std::size_t k = 0; k < layer.size(); ++k)
                for (std::size_t kl = 0; kl < P.size(); ++kl) add_into(F, next[k + kl], apply(F, P[kl], layer[k]));
            layer = std::move(next);
        }
        for (std::size_t k = 0; k < layer.size(); ++k)
            if (!skl::is_zero(layer[k])) terms.emplace_back(-static_cast<std::int64_t>(n0 + k), std::move(layer[k]));
    }
    const std::size_t W = s.window() / m;
    // s a = sum_e s^ b_e X^e, and s^ b_e is known on a window of W, so the sum is exact
    // below e_min + W. A zero s leaves s^ unknown: only the order survives.
    if (terms.empty()) return VecLaurent::zero_mod(s.ord + static_cast<std::int64_t>(W));
    std::int64_t e_min = terms.front().first;
    for (const auto& t : terms) e_min = std::min(e_min, t.first);
    if (s.is_zero()) return VecLaurent::zero_mod(e_min);
    const std::int64_t hi = e_min + static_cast<std::int64_t>(W);
    std::vector<Vec> out(W, Vec(M.n(), 0));
    for (const auto& [e, b] : terms)
        for (std::size_t i = 0; i < W; ++i) {
            const std::int64_t pos = e + static_cast<std::int64_t>(i);
            if (pos >= hi) break;
            for (std::size_t j = i; j <= (i + 1) * m - 1; ++j) {
                if (skl::is_zero(s.coeffs[j])) continue;
                const Vec nb = apply(F, ctx.N(i, j), b);
                if (!skl::is_zero(nb)) add_into(F, out[static_cast<std::size_t>(pos - e_min)], M.act(s.coeffs[j], nb));
            }
        }
    return VecLaurent(e_min, std::move(out));
}

/// A Laurent series over F: coefficients c_ord..c_{hi-1}, zero below ord.
struct FLaurent {
    std::int64_t ord = 0;
    std::vector<Elem> coeffs;
    std::int64_t hi() const noexcept { return ord + static_cast<std::int64_t>(coeffs.size()); }
};

/// Ordinary convolution: F sits in the centre of A((X; sigma, delta)) since sigma, delta
/// and delta' are F-linear. Window: min of the two windows.
inline VecLaurent flsx_scalar_action(const Field& F, const VecLaurent& s, const FLaurent& f, std::size_t n) {
    const std::size_t W = std::min(s.window(), f.coeffs.size());
    const std::int64_t lo = s.ord + f.ord;
    if (s.is_zero()) return VecLaurent::zero_mod(s.hi() + f.ord);
    std::vector<Vec> out(W, Vec(n, 0));
    for (std::size_t i = 0; i < W; ++i)
        for (std::size_t j = 0; i + j < W; ++j) axpy(F, out[i + j], f.coeffs[j], s.coeffs[i]);
    return VecLaurent(lo, std::move(out));
}

/// f as an element of A((X)) (coefficients f_i * 1).
inline TruncLaurent embed_flaurent(const SkewContext& ctx, const FLaurent& f) {
    std::vector<Vec> c;
    for (Elem x : f.coeffs) c.push_back(ctx.algebra().scalar(x));
    return TruncLaurent(f.ord, std::move(c));
}

}  // namespace skl

#endif
