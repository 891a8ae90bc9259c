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
 * @file algebra.hpp
 * @brief Finite-dimensional associative F-algebras given by structure constants.
 *
 * An algebra of dimension r over F has basis a_0..a_{r-1} and products
 * a_i a_j = sum_l c[i][j][l] a_l. Elements are coordinate vectors (AlgebraElement).
 * Stock constructors: matrix algebras, cyclic group algebras, F[t]/(f) and
 * F[Y,Z]/(Y^2, Z^2, YZ). restrict_scalars() views an algebra over GF(p^k) as an
 * algebra over GF(p) of dimension r*k, which is how semilinear maps such as
 * the coefficientwise Frobenius become linear.
 */

#ifndef SKL_ALGEBRA_HPP
#define SKL_ALGEBRA_HPP

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace skl {

using AlgebraElement = Vec;

class Algebra;

/// Records that an algebra over GF(p) was obtained from `base` over `ext` = GF(p^k).
/// Coordinate i*k + e of the restricted algebra is the coefficient of x^e b_i.
struct ScalarRestriction {
    std::shared_ptr<const Field> ext;
    std::shared_ptr<const Algebra> base;
};

struct AlgebraReport {
    bool valid = true;
    std::vector<std::string> failures;
};

class Algebra {
   public:
    /// Builds an algebra from its structure tensor; tensor[i][j] holds the coordinates of
    /// a_i a_j. Only shapes are checked here; see verify_algebra().
    static std::shared_ptr<const Algebra> make(std::shared_ptr<const Field> field, std::vector<std::string> labels,
                                               std::vector<std::vector<Vec>> tensor, Vec unit,
                                               std::optional<ScalarRestriction> restriction = std::nullopt) {
        return std::shared_ptr<const Algebra>(new Algebra(std::move(field), std::move(labels), std::move(tensor),
                                                          std::move(unit), std::move(restriction)));
    }

    const Field& field() const noexcept { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const AlgebraElement& unit() const noexcept { return unit_; }
    const AlgebraElement& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    const std::optional<ScalarRestriction>& restriction() const noexcept { return restriction_; }

    AlgebraElement zero() const { return AlgebraElement(dim(), 0); }
    AlgebraElement basis(std::size_t i) const {
        AlgebraElement e(dim(), 0);
        e.at(i) = 1;
        return e;
    }
    AlgebraElement scalar(Elem c) const { return vec_scale(*field_, c, unit_); }

    void check(std::span<const Elem> x) const {
        if (x.size() != dim())
            throw dimension_error("algebra element has " + std::to_string(x.size()) + " coordinates, expected " +
                                  std::to_string(dim()));
    }

    AlgebraElement mul(std::span<const Elem> x, std::span<const Elem> y) const {
        check(x);
        check(y);
        const Field& F = *field_;
        AlgebraElement out(dim(), 0);
        const std::size_t r = dim();
        for (std::size_t i = 0; i < r; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < r; ++j) {
                if (y[j] == 0) continue;
                const Elem c = F.mul(x[i], y[j]);
                for (const auto& [l, s] : sparse_[i * r + j]) out[l] = F.add(out[l], F.mul(c, s));
            }
        }
        return out;
    }
    AlgebraElement add(std::span<const Elem> x, std::span<const Elem> y) const { return vec_add(*field_, x, y); }
    AlgebraElement sub(std::span<const Elem> x, std::span<const Elem> y) const { return vec_sub(*field_, x, y); }
    AlgebraElement neg(std::span<const Elem> x) const { return vec_neg(*field_, x); }

    /// Matrix of y -> x*y in column convention.
    LinearMap left_mul_matrix(std::span<const Elem> x) const {
        Matrix L(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            const auto col = mul(x, basis(j));
            for (std::size_t i = 0; i < dim(); ++i) L(i, j) = col[i];
        }
        return L;
    }
    /// Matrix of y -> y*x in column convention.
    LinearMap right_mul_matrix(std::span<const Elem> x) const {
        Matrix R(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            const auto col = mul(basis(j), x);
            for (std::size_t i = 0; i < dim(); ++i) R(i, j) = col[i];
        }
        return R;
    }

    /// Canonical text: "E11 + (a+1)*E12", "1" for the unit, "0" for zero. Restricted
    /// algebras print through their extension-field view.
    std::string to_string(std::span<const Elem> x) const;

    /// Inverse of to_string; also accepts "a*E11 - 2*y", "3", "(a+1)".
    AlgebraElement parse(std::string_view text) const;

   private:
    Algebra(std::shared_ptr<const Field> field, std::vector<std::string> labels, std::vector<std::vector<Vec>> tensor,
            Vec unit, std::optional<ScalarRestriction> restriction)
        : field_(std::move(field)), labels_(std::move(labels)), unit_(std::move(unit)), restriction_(std::move(restriction)) {
        const std::size_t r = labels_.size();
        if (r == 0) throw dimension_error("algebra must have positive dimension");
        if (tensor.size() != r) throw dimension_error("structure tensor has wrong outer size");
        if (unit_.size() != r) throw dimension_error("unit has wrong length");
        table_.reserve(r * r);
        sparse_.resize(r * r);
        for (std::size_t i = 0; i < r; ++i) {
            if (tensor[i].size() != r) throw dimension_error("structure tensor row has wrong size");
            for (std::size_t j = 0; j < r; ++j) {
                if (tensor[i][j].size() != r) throw dimension_error("structure constant vector has wrong size");
                for (std::size_t l = 0; l < r; ++l) {
                    const Elem c = tensor[i][j][l];
                    if (!field_->contains(c)) throw dimension_error("structure constant out of field range");
                    if (c != 0) sparse_[i * r + j].emplace_back(l, c);
                }
                table_.push_back(std::move(tensor[i][j]));
            }
        }
    }

    std::shared_ptr<const Field> field_;
    std::vector<std::string> labels_;
    std::vector<Vec> table_;
    std::vector<std::vector<std::pair<std::size_t, Elem>>> sparse_;
    AlgebraElement unit_;
    std::optional<ScalarRestriction> restriction_;
};

/// Exhaustive check of associativity on all basis triples and of the two-sided unit.
inline AlgebraReport verify_algebra(const Algebra& A) {
    AlgebraReport rep;
    const std::size_t r = A.dim();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const auto& ij = A.product(i, j);
            for (std::size_t l = 0; l < r; ++l) {
                const auto lhs = A.mul(ij, A.basis(l));
                const auto rhs = A.mul(A.basis(i), A.product(j, l));
                if (lhs != rhs) {
                    rep.valid = false;
                    rep.failures.push_back("associativity fails on (" + A.labels()[i] + "*" + A.labels()[j] + ")*" +
                                           A.labels()[l] + ": " + A.to_string(lhs) + " != " + A.to_string(rhs));
                }
            }
        }
    for (std::size_t i = 0; i < r; ++i) {
        const auto b = A.basis(i);
        if (A.mul(A.unit(), b) != b) {
            rep.valid = false;
            rep.failures.push_back("unit fails on the left of " + A.labels()[i]);
        }
        if (A.mul(b, A.unit()) != b) {
            rep.valid = false;
            rep.failures.push_back("unit fails on the right of " + A.labels()[i]);
        }
    }
    return rep;
}

inline std::shared_ptr<const Algebra> verified(std::shared_ptr<const Algebra> A) {
    const auto rep = verify_algebra(*A);
    if (!rep.valid) throw axiom_error("invalid algebra: " + rep.failures.front());
    return A;
}

/// M_n(F) on matrix units E_ij (index (i-1)n + (j-1)); E_ij E_kl = [j = k] E_il.
inline std::shared_ptr<const Algebra> matrix_algebra(std::shared_ptr<const Field> F, std::size_t n) {
    if (n == 0) throw dimension_error("matrix size must be positive");
    const std::size_t r = n * n;
    auto label = [n](std::size_t i, std::size_t j) {
        return n < 10 ? "E" + std::to_string(i + 1) + std::to_string(j + 1)
                      : "E" + std::to_string(i + 1) + "," + std::to_string(j + 1);
    };
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) labels.push_back(label(i, j));
    std::vector<std::vector<Vec>> t(r, std::vector<Vec>(r, Vec(r, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) t[i * n + j][j * n + l][i * n + l] = 1;
    Vec unit(r, 0);
    for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
    return verified(Algebra::make(std::move(F), std::move(labels), std::move(t), std::move(unit)));
}

inline std::vector<std::string> power_labels(const std::string& var, std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "1" : i == 1 ? var : var + "^" + std::to_string(i));
    return labels;
}

/// F C_n with basis 1, g, ..., g^{n-1}.
inline std::shared_ptr<const Algebra> group_algebra_cyclic(std::shared_ptr<const Field> F, std::size_t n,
                                                           const std::string& generator = "g") {
    if (n == 0) throw dimension_error("group order must be positive");
    std::vector<std::vector<Vec>> t(n, std::vector<Vec>(n, Vec(n, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j][(i + j) % n] = 1;
    Vec unit(n, 0);
    unit[0] = 1;
    return verified(Algebra::make(std::move(F), power_labels(generator, n), std::move(t), std::move(unit)));
}

/// F[Y,Z]/(Y^2, Z^2, YZ) with basis 1, y, z.
inline std::shared_ptr<const Algebra> quotient_algebra_yz(std::shared_ptr<const Field> F) {
    std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3, Vec(3, 0)));
    t[0][0][0] = 1;
    t[0][1][1] = 1;
    t[1][0][1] = 1;
    t[0][2][2] = 1;
    t[2][0][2] = 1;
    return verified(Algebra::make(std::move(F), {"1", "y", "z"}, std::move(t), Vec{1, 0, 0}));
}

/// F[t]/(f) for monic f (coefficients low -> high) of degree n >= 1.
inline std::shared_ptr<const Algebra> quotient_algebra_tn(std::shared_ptr<const Field> F, const Vec& f,
                                                          const std::string& var = "t") {
    if (f.size() < 2) throw dimension_error("modulus must have degree at least 1");
    if (f.back() != 1) throw axiom_error("modulus polynomial must be monic");
    const std::size_t n = f.size() - 1;
    const Field& K = *F;
    // reduce t^e for e < 2n-1
    std::vector<Vec> power(2 * n - 1, Vec(n, 0));
    for (std::size_t e = 0; e < power.size(); ++e) {
        if (e < n) {
            power[e][e] = 1;
            continue;
        }
        // t^e = t * t^{e-1}
        const Vec& prev = power[e - 1];
        Vec cur(n, 0);
        for (std::size_t i = 0; i + 1 < n; ++i) cur[i + 1] = prev[i];
        const Elem top = prev[n - 1];
        for (std::size_t i = 0; i < n; ++i) cur[i] = K.sub(cur[i], K.mul(top, f[i]));
        power[e] = std::move(cur);
    }
    std::vector<std::vector<Vec>> t(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = power[i + j];
    Vec unit(n, 0);
    unit[0] = 1;
    return verified(Algebra::make(std::move(F), power_labels(var, n), std::move(t), std::move(unit)));
}

/// The algebra A over GF(p^k) viewed as an algebra over GF(p), with basis x^e b_i.
inline std::shared_ptr<const Algebra> restrict_scalars(const std::shared_ptr<const Algebra>& A) {
    const auto ext = A->field_ptr();
    const std::size_t k = ext->k(), r = A->dim(), R = r * k;
    auto prime = Field::make(FieldSpec{ext->p(), 1, {0, 1}}, ext->symbol());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t e = 0; e < k; ++e) {
            std::string pre = e == 0 ? "" : e == 1 ? ext->symbol() + "*" : ext->symbol() + "^" + std::to_string(e) + "*";
            labels.push_back(pre + A->labels()[i]);
        }
    std::vector<std::vector<Vec>> t(R, std::vector<Vec>(R, Vec(R, 0)));
    const Elem x = ext->generator();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t e = 0; e < k; ++e)
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t f = 0; f < k; ++f) {
                    const Elem scale = ext->pow(x, static_cast<std::int64_t>(e + f));
                    const auto& prod = A->product(i, j);
                    for (std::size_t l = 0; l < r; ++l) {
                        const auto d = ext->coeffs(ext->mul(scale, prod[l]));
                        for (std::size_t g = 0; g < k; ++g) t[i * k + e][j * k + f][l * k + g] = d[g];
                    }
                }
    Vec unit(R, 0);
    for (std::size_t i = 0; i < r; ++i) {
        const auto d = ext->coeffs(A->unit()[i]);
        for (std::size_t g = 0; g < k; ++g) unit[i * k + g] = d[g];
    }
    return verified(Algebra::make(std::move(prime), std::move(labels), std::move(t), std::move(unit),
                                  ScalarRestriction{ext, A}));
}

namespace detail {

inline AlgebraElement to_restricted(const Algebra& R, std::span<const Elem> base_coords) {
    const auto& ext = *R.restriction()->ext;
    const std::size_t k = ext.k();
    AlgebraElement out(R.dim(), 0);
    for (std::size_t i = 0; i < base_coords.size(); ++i) {
        const auto d = ext.coeffs(base_coords[i]);
        for (std::size_t g = 0; g < k; ++g) out[i * k + g] = d[g];
    }
    return out;
}

inline AlgebraElement from_restricted(const Algebra& R, std::span<const Elem> coords) {
    const auto& ext = *R.restriction()->ext;
    const std::size_t k = ext.k();
    AlgebraElement out(R.dim() / k, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = ext.from_coeffs(std::vector<std::uint32_t>(coords.begin() + i * k, coords.begin() + (i + 1) * k));
    return out;
}

}  // namespace detail

/// Lifts an F_{p^k}-linear map of the base algebra to the restricted algebra.
inline LinearMap restrict_map(const Algebra& R, const LinearMap& base_map) {
    if (!R.restriction()) throw mismatch_error("algebra is not a scalar restriction");
    const auto& ext = *R.restriction()->ext;
    const std::size_t k = ext.k();
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < base_map.cols(); ++i)
        for (std::size_t e = 0; e < k; ++e) {
            Vec img = vec_scale(ext, ext.pow(ext.generator(), static_cast<std::int64_t>(e)), base_map.column(i));
            cols.push_back(detail::to_restricted(R, img));
        }
    return Matrix::from_columns(cols);
}

/// x^e b_i -> (x^e)^p b_i on a restricted algebra: the Frobenius applied to every
/// coefficient of the base algebra.
inline LinearMap componentwise_frobenius(const Algebra& R) {
    if (!R.restriction()) throw mismatch_error("algebra is not a scalar restriction");
    const auto& ext = *R.restriction()->ext;
    const std::size_t k = ext.k(), r = R.dim() / k;
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t e = 0; e < k; ++e) {
            Vec img(r, 0);
            img[i] = ext.frobenius(ext.pow(ext.generator(), static_cast<std::int64_t>(e)));
            cols.push_back(detail::to_restricted(R, img));
        }
    return Matrix::from_columns(cols);
}

inline std::string Algebra::to_string(std::span<const Elem> x) const {
    check(x);
    if (restriction_) {
        const auto base_coords = detail::from_restricted(*this, x);
        return restriction_->base->to_string(base_coords);
    }
    const Field& F = *field_;
    if (is_zero(x)) return "0";
    // c * unit prints as c
    for (std::size_t i = 0; i < dim(); ++i) {
        if (unit_[i] == 0) continue;
        const Elem c = F.div(x[i], unit_[i]);
        if (c != 0 && vec_scale(F, c, unit_) == Vec(x.begin(), x.end())) {
            const std::string s = F.to_string(c);
            return s.find('+') == std::string::npos ? s : "(" + s + ")";
        }
        break;
    }
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        if (!out.empty()) out += " + ";
        std::string c = F.to_string(x[i]);
        if (c.find('+') != std::string::npos) c = "(" + c + ")";
        if (labels_[i] == "1") out += c;
        else if (x[i] == 1) out += labels_[i];
        else out += c + "*" + labels_[i];
    }
    return out;
}

inline AlgebraElement Algebra::parse(std::string_view text) const {
    if (restriction_) return detail::to_restricted(*this, restriction_->base->parse(text));
    const Field& F = *field_;
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw parse_error("empty algebra element");
    std::size_t pos = 0;
    // labels sorted longest first so that "g^2" wins over "g"
    std::vector<std::size_t> order(dim());
    for (std::size_t i = 0; i < dim(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return labels_[a].size() > labels_[b].size(); });
    auto match_label = [&]() -> std::optional<std::size_t> {
        for (std::size_t i : order) {
            const auto& L = labels_[i];
            if (L == "1") continue;
            if (s.compare(pos, L.size(), L) != 0) continue;
            const std::size_t end = pos + L.size();
            if (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '^')) continue;
            pos = end;
            return i;
        }
        return std::nullopt;
    };
    auto parse_coef = [&]() -> Elem {
        if (s[pos] == '(') {
            const std::size_t close = s.find(')', pos);
            if (close == std::string::npos) throw parse_error("unbalanced parenthesis in '" + s + "'");
            const Elem c = F.parse(std::string_view(s).substr(pos + 1, close - pos - 1));
            pos = close + 1;
            return c;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-' && s[end] != '*') {
            if (s[end] == '^') {
                ++end;
                if (end < s.size() && s[end] == '-') ++end;
            } else {
                ++end;
            }
        }
        if (end == pos) throw parse_error("expected a coefficient in '" + s + "'");
        const Elem c = F.parse(std::string_view(s).substr(pos, end - pos));
        pos = end;
        return c;
    };
    AlgebraElement acc = zero();
    bool first = true;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            throw parse_error("expected '+' or '-' in '" + s + "'");
        }
        first = false;
        if (pos >= s.size()) throw parse_error("dangling sign in '" + s + "'");
        Elem coef = 1;
        std::optional<std::size_t> label = match_label();
        while (!label) {
            coef = F.mul(coef, parse_coef());
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                label = match_label();
                continue;
            }
            break;
        }
        AlgebraElement term = label ? vec_scale(F, coef, basis(*label)) : scalar(coef);
        acc = negative ? sub(acc, term) : add(acc, term);
    }
    return acc;
}

}  // namespace skl

#endif
