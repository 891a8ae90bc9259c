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
 * @file worked.hpp
 * @brief The four stock contexts and the identities each one is known to satisfy.
 *
 *   m2f4-inner   M_2(F_4) over F_2, sigma = entrywise Frobenius, delta = inner by E12
 *   m2f4-diag    same ring and sigma, delta = inner by diag(0, a)
 *   f4c5-group   F_4 C_5 (generator g), sigma(g) = g^2, delta = inner by 1
 *   fyz-quotient F[Y,Z]/(Y^2, Z^2, YZ), sigma(y) = y + z, sigma(z) = z, delta(z) = y
 */

#ifndef SKL_WORKED_HPP
#define SKL_WORKED_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "skewlaurent.hpp"
#include "skewmap.hpp"

namespace skl::worked {

inline std::shared_ptr<const Field> f4() { return Field::gf(2, 2, "a"); }

/// M_2(F_4) viewed over F_2 (dimension 8): the entrywise Frobenius is only F_2-linear.
inline std::shared_ptr<const Algebra> m2f4() { return restrict_scalars(matrix_algebra(f4(), 2)); }

/// [[x0, x1], [x2, x3]] in the F_2 view.
inline AlgebraElement m2f4_matrix(const Algebra& R, Elem x0, Elem x1, Elem x2, Elem x3) {
    const Vec base{x0, x1, x2, x3};
    return ::skl::detail::to_restricted(R, base);
}

inline std::shared_ptr<const SkewDerivation> m2f4_inner_by(std::span<const Elem> base_M) {
    const auto A = m2f4();
    const auto sigma = componentwise_frobenius(*A);
    const auto delta = inner_derivation(*A, sigma, ::skl::detail::to_restricted(*A, base_M));
    return SkewDerivation::make(A, sigma, delta);
}

inline std::shared_ptr<const SkewDerivation> m2f4_inner() { return m2f4_inner_by(Vec{0, 1, 0, 0}); }

inline std::shared_ptr<const SkewDerivation> m2f4_diag() {
    const Elem a = f4()->generator();
    return m2f4_inner_by(Vec{0, 0, 0, a});
}

/// sigma(g^i) = g^{2i} on F C_n.
inline LinearMap cyclic_doubling(const Algebra& A) {
    const std::size_t n = A.dim();
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(A.basis((2 * i) % n));
    return Matrix::from_columns(cols);
}

inline std::shared_ptr<const SkewDerivation> f4c5_group() {
    const auto A = group_algebra_cyclic(f4(), 5, "g");
    const auto sigma = cyclic_doubling(*A);
    return SkewDerivation::make(A, sigma, inner_derivation(*A, sigma, A->unit()));
}

/// Over F_2 unless another field is given.
inline std::shared_ptr<const SkewDerivation> fyz_quotient(std::shared_ptr<const Field> F = Field::gf(2)) {
    const auto A = quotient_algebra_yz(std::move(F));
    // basis 1, y, z
    Matrix sigma = Matrix::identity(3);
    sigma(2, 1) = 1;  // sigma(y) = y + z
    Matrix delta(3, 3);
    delta(1, 2) = 1;  // delta(z) = y
    return SkewDerivation::make(A, sigma, delta);
}

inline std::shared_ptr<const SkewDerivation> by_name(const std::string& name) {
    if (name == "m2f4-inner") return m2f4_inner();
    if (name == "m2f4-diag") return m2f4_diag();
    if (name == "f4c5-group") return f4c5_group();
    if (name == "fyz-quotient") return fyz_quotient();
    throw parse_error("unknown example '" + name + "' (expected m2f4-inner, f4c5-group, m2f4-diag or fyz-quotient)");
}

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> n{"m2f4-inner", "f4c5-group", "m2f4-diag", "fyz-quotient"};
    return n;
}

struct Check {
    std::string what;
    bool ok;
};

namespace detail {

inline void push(std::vector<Check>& out, std::string what, bool ok) { out.push_back({std::move(what), ok}); }

inline std::string eq(const Algebra& A, const std::string& lhs, std::span<const Elem> got) {
    return lhs + " = " + A.to_string(got);
}

}  // namespace detail

/// delta([[x0,x1],[x2,x3]]) = [[x2, x0^2 + x3], [0, x2^2]] for all 256 matrices, delta^2 = 0,
/// sigma(M) = M, sigma delta = delta sigma, and the three rings exist with m = m' = 2.
inline std::vector<Check> run_m2f4_inner() {
    std::vector<Check> out;
    const auto d = m2f4_inner();
    const Algebra& A = d->algebra();
    const Field& K = *A.restriction()->ext;
    const Field& F = A.field();
    const char* names[4] = {"E11", "E12", "E21", "E22"};
    for (std::size_t u = 0; u < 4; ++u) {
        Vec x(4, 0);
        x[u] = 1;
        const auto got = d->apply_delta(::skl::detail::to_restricted(A, x));
        const auto want = m2f4_matrix(A, x[2], K.add(K.mul(x[0], x[0]), x[3]), 0, K.mul(x[2], x[2]));
        detail::push(out, detail::eq(A, std::string("delta(") + names[u] + ")", got), got == want);
    }
    bool all = true;
    for (Elem x0 = 0; x0 < 4; ++x0)
        for (Elem x1 = 0; x1 < 4; ++x1)
            for (Elem x2 = 0; x2 < 4; ++x2)
                for (Elem x3 = 0; x3 < 4; ++x3) {
                    const auto got = d->apply_delta(m2f4_matrix(A, x0, x1, x2, x3));
                    const auto want = m2f4_matrix(A, x2, K.add(K.mul(x0, x0), x3), 0, K.mul(x2, x2));
                    all = all && got == want;
                }
    detail::push(out, "delta([[x0,x1],[x2,x3]]) = [[x2, x0^2+x3],[0, x2^2]] on all 256 matrices", all);
    detail::push(out, "delta^2 = 0", mat_mul(F, d->delta(), d->delta()).is_zero());
    const auto M = m2f4_matrix(A, 0, 1, 0, 0);
    detail::push(out, "sigma(E12) = E12", d->apply_sigma(M) == M);
    detail::push(out, "sigma delta = delta sigma",
                 mat_mul(F, d->sigma(), d->delta()) == mat_mul(F, d->delta(), d->sigma()));
    const auto e = laurent_ring_exists(*d);
    detail::push(out, "m_delta = 2", e.m_delta == std::optional<std::size_t>(2));
    detail::push(out, "m_delta' = 2", e.m_delta_prime == std::optional<std::size_t>(2));
    detail::push(out, "skew Laurent series ring exists", e.series && e.laurent);
    return out;
}

/// delta(g) = g + g^2, delta^2(g) = g + g^4, delta^3(g) = g + g^2 + g^3 + g^4, delta^4 = 0.
inline std::vector<Check> run_f4c5_group() {
    std::vector<Check> out;
    const auto d = f4c5_group();
    const Algebra& A = d->algebra();
    const Field& F = A.field();
    const auto g = A.basis(1);
    auto sum = [&](std::initializer_list<std::size_t> idx) {
        Vec v = A.zero();
        for (auto i : idx) v = A.add(v, A.basis(i));
        return v;
    };
    const std::vector<Vec> want{sum({1, 2}), sum({1, 4}), sum({1, 2, 3, 4}), A.zero()};
    Vec cur = g;
    for (std::size_t k = 1; k <= 4; ++k) {
        cur = d->apply_delta(cur);
        const std::string lhs = k == 1 ? "delta(g)" : "delta^" + std::to_string(k) + "(g)";
        detail::push(out, detail::eq(A, lhs, cur), cur == want[k - 1]);
    }
    detail::push(out, "delta^4 = 0 on all of A", mat_pow(F, d->delta(), 4).is_zero());
    detail::push(out, "sigma delta = delta sigma",
                 mat_mul(F, d->sigma(), d->delta()) == mat_mul(F, d->delta(), d->sigma()));
    const auto e = laurent_ring_exists(*d);
    detail::push(out, "m_delta = 4", e.m_delta == std::optional<std::size_t>(4));
    detail::push(out, "delta' is nilpotent", e.m_delta_prime.has_value());
    detail::push(out, "skew Laurent series ring exists", e.series && e.laurent);
    return out;
}

/// delta(M) = M and delta'(M) = M for M = diag(0, a); no series, no Laurent series.
inline std::vector<Check> run_m2f4_diag() {
    std::vector<Check> out;
    const auto d = m2f4_diag();
    const Algebra& A = d->algebra();
    const Field& F = A.field();
    const Elem a = f4()->generator();
    const auto M = m2f4_matrix(A, 0, 0, 0, a);
    detail::push(out, detail::eq(A, "delta(diag(0,a))", d->apply_delta(M)), d->apply_delta(M) == M);
    const auto dp = apply(F, *d->delta_prime(), M);
    detail::push(out, detail::eq(A, "delta'(diag(0,a))", dp), dp == M);
    detail::push(out, "sigma^{-1} = sigma", *d->sigma_inv() == d->sigma());
    const auto e = laurent_ring_exists(*d);
    detail::push(out, "delta is not nilpotent (series refused): " + e.series_witness, !e.series);
    detail::push(out, "delta' is not nilpotent (Laurent refused): " + e.laurent_witness,
                 !e.laurent && !e.m_delta_prime.has_value());
    return out;
}

/// The four derivation identities on y, z, delta^2 = 0, delta'(y) = y.
inline std::vector<Check> run_fyz_quotient(std::shared_ptr<const Field> K = Field::gf(2)) {
    std::vector<Check> out;
    const auto d = fyz_quotient(K);
    const Algebra& A = d->algebra();
    const Field& F = A.field();
    const auto y = A.basis(1), z = A.basis(2);
    auto rule = [&](const Vec& u, const Vec& v, const std::string& un, const std::string& vn) {
        const auto lhs = A.add(A.mul(d->apply_sigma(u), d->apply_delta(v)), A.mul(d->apply_delta(u), v));
        const auto rhs = d->apply_delta(A.mul(u, v));
        detail::push(out,
                     "sigma(" + un + ")delta(" + vn + ") + delta(" + un + ")" + vn + " = " + A.to_string(lhs) +
                         " = delta(" + un + vn + ")",
                     lhs == rhs && is_zero(lhs));
    };
    rule(y, y, "y", "y");
    rule(z, z, "z", "z");
    rule(y, z, "y", "z");
    rule(z, y, "z", "y");
    detail::push(out, "delta^2 = 0", mat_mul(F, d->delta(), d->delta()).is_zero());
    const auto dp = apply(F, *d->delta_prime(), y);
    detail::push(out, detail::eq(A, "delta'(y)", dp), dp == y);
    const auto e = laurent_ring_exists(*d);
    detail::push(out, "m_delta = 2 (series exist)", e.series && e.m_delta == std::optional<std::size_t>(2));
    detail::push(out, "delta' is not nilpotent (Laurent refused): " + e.laurent_witness, !e.laurent);
    return out;
}

inline std::vector<Check> run(const std::string& name) {
    if (name == "m2f4-inner") return run_m2f4_inner();
    if (name == "f4c5-group") return run_f4c5_group();
    if (name == "m2f4-diag") return run_m2f4_diag();
    if (name == "fyz-quotient") return run_fyz_quotient();
    throw parse_error("unknown example '" + name + "' (expected m2f4-inner, f4c5-group, m2f4-diag or fyz-quotient)");
}

}  // namespace skl::worked

#endif
