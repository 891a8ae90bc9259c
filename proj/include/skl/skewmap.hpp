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
 * @file skewmap.hpp
 * @brief Skew derivations (sigma, delta) on a structure-constant algebra.
 *
 * A left skew derivation is a ring endomorphism sigma together with an additive delta
 * satisfying delta(ab) = sigma(a) delta(b) + delta(a) b. When sigma is invertible the
 * pair (sigma', delta') = (sigma^{-1}, -delta sigma^{-1}) is a right skew derivation and
 * governs the commutation of X^{-1}.
 *
 * The operators N_i^n expand X^n a = sum_i N_i^n(a) X^i and obey
 *   N_i^{n+1} = sigma N_{i-1}^n + delta N_i^n,  N_0^0 = id.
 */

#ifndef SKL_SKEWMAP_HPP
#define SKL_SKEWMAP_HPP

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace skl {

/// Minimal m <= dim with L^m = 0, or nothing when L is not nilpotent.
inline std::optional<std::size_t> nilpotency_index(const Field& F, const LinearMap& L) {
    if (!L.square()) throw dimension_error("nilpotency index of a non-square map");
    const std::size_t r = L.rows();
    Matrix P = Matrix::identity(r);
    for (std::size_t m = 1; m <= r; ++m) {
        P = mat_mul(F, L, P);
        if (P.is_zero()) return m;
    }
    if (r == 0) return 0;
    return std::nullopt;
}

/// x -> M x - sigma(x) M. Always a sigma-derivation when sigma is an endomorphism.
inline LinearMap inner_derivation(const Algebra& A, const LinearMap& sigma, std::span<const Elem> M) {
    A.check(M);
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < A.dim(); ++j) {
        const auto b = A.basis(j);
        cols.push_back(A.sub(A.mul(M, b), A.mul(apply(A.field(), sigma, b), M)));
    }
    return Matrix::from_columns(cols);
}

struct DerivationReport {
    bool ok = true;
    bool sigma_invertible = false;
    std::vector<std::string> failures;
};

/// Checks sigma(1) = 1, multiplicativity of sigma and the sigma-derivation rule on all
/// basis pairs. Every failing instance is listed.
inline DerivationReport check_skew_derivation(const Algebra& A, const LinearMap& sigma, const LinearMap& delta) {
    const std::size_t r = A.dim();
    if (sigma.rows() != r || sigma.cols() != r || delta.rows() != r || delta.cols() != r)
        throw dimension_error("sigma and delta must be " + std::to_string(r) + "x" + std::to_string(r));
    const Field& F = A.field();
    DerivationReport rep;
    const auto& L = A.labels();
    if (apply(F, sigma, A.unit()) != A.unit()) {
        rep.ok = false;
        rep.failures.push_back("sigma(1) = " + A.to_string(apply(F, sigma, A.unit())) + " != 1");
    }
    std::vector<Vec> s(r), d(r);
    for (std::size_t i = 0; i < r; ++i) {
        s[i] = sigma.column(i);
        d[i] = delta.column(i);
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const auto& ij = A.product(i, j);
            const auto lhs_s = apply(F, sigma, ij);
            const auto rhs_s = A.mul(s[i], s[j]);
            if (lhs_s != rhs_s) {
                rep.ok = false;
                rep.failures.push_back("sigma(" + L[i] + "*" + L[j] + ") = " + A.to_string(lhs_s) + " but sigma(" + L[i] +
                                       ")*sigma(" + L[j] + ") = " + A.to_string(rhs_s));
            }
            const auto lhs_d = apply(F, delta, ij);
            const auto rhs_d = A.add(A.mul(s[i], d[j]), A.mul(d[i], A.basis(j)));
            if (lhs_d != rhs_d) {
                rep.ok = false;
                rep.failures.push_back("delta(" + L[i] + "*" + L[j] + ") = " + A.to_string(lhs_d) + " but sigma(" + L[i] +
                                       ")delta(" + L[j] + ") + delta(" + L[i] + ")" + L[j] + " = " + A.to_string(rhs_d));
            }
        }
    rep.sigma_invertible = rank(F, sigma) == r;
    return rep;
}

/// A verified skew derivation with cached sigma^{-1}, delta' = -delta sigma^{-1} and
/// nilpotency indices. Immutable.
class SkewDerivation {
   public:
    /// Throws axiom_error naming the first failing axiom instance. A non-invertible sigma
    /// is accepted: the polynomial ring exists, the right-hand machinery does not.
    static std::shared_ptr<const SkewDerivation> make(std::shared_ptr<const Algebra> A, LinearMap sigma,
                                                      LinearMap delta) {
        const auto rep = check_skew_derivation(*A, sigma, delta);
        if (!rep.ok) throw axiom_error(rep.failures.front());
        return std::shared_ptr<const SkewDerivation>(new SkewDerivation(std::move(A), std::move(sigma), std::move(delta)));
    }

    const Algebra& algebra() const noexcept { return *A_; }
    const std::shared_ptr<const Algebra>& algebra_ptr() const noexcept { return A_; }
    const Field& field() const noexcept { return A_->field(); }
    const LinearMap& sigma() const noexcept { return sigma_; }
    const LinearMap& delta() const noexcept { return delta_; }
    const std::optional<LinearMap>& sigma_inv() const noexcept { return sigma_inv_; }
    const std::optional<LinearMap>& delta_prime() const noexcept { return delta_prime_; }
    bool sigma_invertible() const noexcept { return sigma_inv_.has_value(); }
    std::optional<std::size_t> m_delta() const noexcept { return m_delta_; }
    std::optional<std::size_t> m_delta_prime() const noexcept { return m_delta_prime_; }

    AlgebraElement apply_sigma(std::span<const Elem> x) const { return apply(field(), sigma_, x); }
    AlgebraElement apply_delta(std::span<const Elem> x) const { return apply(field(), delta_, x); }

   private:
    SkewDerivation(std::shared_ptr<const Algebra> A, LinearMap sigma, LinearMap delta)
        : A_(std::move(A)), sigma_(std::move(sigma)), delta_(std::move(delta)) {
        const Field& F = A_->field();
        sigma_inv_ = inverse(F, sigma_);
        if (sigma_inv_) {
            delta_prime_ = mat_neg(F, mat_mul(F, delta_, *sigma_inv_));
            m_delta_prime_ = nilpotency_index(F, *delta_prime_);
        }
        m_delta_ = nilpotency_index(F, delta_);
    }

    std::shared_ptr<const Algebra> A_;
    LinearMap sigma_, delta_;
    std::optional<LinearMap> sigma_inv_, delta_prime_;
    std::optional<std::size_t> m_delta_, m_delta_prime_;
};

/// Memoized N_i^n matrices. Grows monotonically; extension takes an exclusive lock and
/// lookups a shared one, so a table may be shared between threads.
class NOperatorTable {
   public:
    explicit NOperatorTable(std::shared_ptr<const SkewDerivation> d, std::size_t n_max = 0) : d_(std::move(d)) {
        rows_.push_back({Matrix::identity(d_->algebra().dim())});
        ensure(n_max);
    }

    /// N_i^n for 0 <= i <= n.
    const Matrix& at(std::size_t i, std::size_t n) const {
        if (i > n) throw std::out_of_range("N_i^n needs i <= n (got i=" + std::to_string(i) + ", n=" + std::to_string(n) + ")");
        ensure(n);
        std::shared_lock lock(mutex_);
        return rows_[n][i];
    }

    std::size_t n_max() const {
        std::shared_lock lock(mutex_);
        return rows_.size() - 1;
    }

    void ensure(std::size_t n) const {
        {
            std::shared_lock lock(mutex_);
            if (n < rows_.size()) return;
        }
        std::unique_lock lock(mutex_);
        const Field& F = d_->field();
        const std::size_t r = d_->algebra().dim();
        while (rows_.size() <= n) {
            const auto& prev = rows_.back();
            const std::size_t m = prev.size();  // previous n + 1
            std::vector<Matrix> row;
            row.reserve(m + 1);
            for (std::size_t i = 0; i <= m; ++i) {
                Matrix acc(r, r);
                if (i >= 1) acc = mat_mul(F, d_->sigma(), prev[i - 1]);
                if (i < m) acc = mat_add(F, acc, mat_mul(F, d_->delta(), prev[i]));
                row.push_back(std::move(acc));
            }
            rows_.push_back(std::move(row));
        }
    }

   private:
    std::shared_ptr<const SkewDerivation> d_;
    mutable std::deque<std::vector<Matrix>> rows_;
    mutable std::shared_mutex mutex_;
};

/// The handle every ring operation takes: a verified derivation plus its shared N-table.
class SkewContext {
   public:
    explicit SkewContext(std::shared_ptr<const SkewDerivation> d)
        : d_(std::move(d)), table_(std::make_shared<NOperatorTable>(d_)) {}

    const SkewDerivation& derivation() const noexcept { return *d_; }
    const std::shared_ptr<const SkewDerivation>& derivation_ptr() const noexcept { return d_; }
    const Algebra& algebra() const noexcept { return d_->algebra(); }
    const Field& field() const noexcept { return d_->field(); }
    std::size_t dim() const noexcept { return d_->algebra().dim(); }

    const Matrix& N(std::size_t i, std::size_t n) const { return table_->at(i, n); }
    const NOperatorTable& table() const noexcept { return *table_; }

    bool same_as(const SkewContext& o) const noexcept { return d_ == o.d_; }

    /// m with delta^m = 0; series need it.
    std::size_t m_delta() const {
        if (!d_->m_delta())
            throw context_error("delta is not nilpotent: the skew power series ring does not exist "
                                "(X is not a left denominator set)");
        return *d_->m_delta();
    }
    /// m' with delta'^m' = 0; Laurent series need it together with an invertible sigma.
    std::size_t m_delta_prime() const {
        if (!d_->sigma_invertible()) throw context_error("sigma is not invertible: Laurent series are unavailable");
        if (!d_->m_delta_prime())
            throw context_error("delta' is not nilpotent: X is not a right denominator set of the power series ring");
        return *d_->m_delta_prime();
    }
    void require_laurent() const {
        m_delta();
        m_delta_prime();
    }

   private:
    std::shared_ptr<const SkewDerivation> d_;
    std::shared_ptr<NOperatorTable> table_;
};

inline const Matrix& n_operator(const SkewContext& ctx, std::size_t i, std::size_t n) { return ctx.N(i, n); }

}  // namespace skl

#endif
