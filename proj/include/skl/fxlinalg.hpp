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
 * @file fxlinalg.hpp
 * @brief Polynomials over F and matrices over the PID F[X]: Hermite and Smith forms,
 * row-module membership, purification and the direct-summand test.
 *
 * Pivot choice is deterministic: smallest degree first, then lowest row (then column).
 */

#ifndef SKL_FXLINALG_HPP
#define SKL_FXLINALG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace skl {

/// Polynomial over F, coefficients low to high, no trailing zeros (zero = empty).
using FPoly = std::vector<Elem>;

inline void fp_trim(FPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t fp_deg(const FPoly& a) noexcept { return static_cast<std::int64_t>(a.size()) - 1; }

inline FPoly fp_const(Elem c) { return c == 0 ? FPoly{} : FPoly{c}; }

/// c X^e
inline FPoly fp_monomial(Elem c, std::size_t e) {
    if (c == 0) return {};
    FPoly r(e + 1, 0);
    r[e] = c;
    return r;
}

inline FPoly fp_add(const Field& F, const FPoly& a, const FPoly& b) {
    FPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    fp_trim(r);
    return r;
}

inline FPoly fp_neg(const Field& F, const FPoly& a) {
    FPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.neg(a[i]);
    return r;
}

inline FPoly fp_sub(const Field& F, const FPoly& a, const FPoly& b) { return fp_add(F, a, fp_neg(F, b)); }

inline FPoly fp_scale(const Field& F, Elem c, const FPoly& a) {
    if (c == 0) return {};
    FPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
    return r;
}

inline FPoly fp_mul(const Field& F, const FPoly& a, const FPoly& b) {
    if (a.empty() || b.empty()) return {};
    FPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    fp_trim(r);
    return r;
}

/// (quotient, remainder)
inline std::pair<FPoly, FPoly> fp_divmod(const Field& F, const FPoly& a, const FPoly& b) {
    if (b.empty()) throw zero_division_error("polynomial division by zero");
    FPoly r = a;
    fp_trim(r);
    if (r.size() < b.size()) return {{}, r};
    FPoly q(r.size() - b.size() + 1, 0);
    const Elem lead_inv = F.inv(b.back());
    while (r.size() >= b.size()) {
        const std::size_t shift = r.size() - b.size();
        const Elem c = F.mul(r.back(), lead_inv);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
        fp_trim(r);
    }
    fp_trim(q);
    return {q, r};
}

/// Exact quotient; throws if b does not divide a.
inline FPoly fp_exact_div(const Field& F, const FPoly& a, const FPoly& b) {
    auto [q, r] = fp_divmod(F, a, b);
    if (!r.empty()) throw axiom_error("inexact polynomial division");
    return q;
}

inline bool fp_divides(const Field& F, const FPoly& d, const FPoly& a) {
    if (d.empty()) return a.empty();
    return fp_divmod(F, a, d).second.empty();
}

inline FPoly fp_monic(const Field& F, const FPoly& a) {
    if (a.empty()) return a;
    return fp_scale(F, F.inv(a.back()), a);
}

inline FPoly fp_gcd(const Field& F, FPoly a, FPoly b) {
    while (!b.empty()) {
        auto r = fp_divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(F, a);
}

/// Printed in X, e.g. "X^2 + a*X + 1".
inline std::string fp_to_string(const Field& F, const FPoly& a, const std::string& var = "X") {
    if (a.empty()) return "0";
    std::string out;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        std::string c = F.to_string(a[i]);
        const bool compound = c.find_first_of("+-") != std::string::npos && c.find_first_of("+-") != 0;
        std::string mono = i == 0 ? "" : i == 1 ? var : var + "^" + std::to_string(i);
        std::string term;
        if (i == 0) term = c;
        else if (a[i] == 1) term = mono;
        else term = (compound ? "(" + c + ")" : c) + "*" + mono;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

/// k x n matrix over F[X].
class PolyMatrix {
   public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static PolyMatrix identity(std::size_t n) {
        PolyMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = FPoly{1};
        return m;
    }
    static PolyMatrix from_rows(const std::vector<std::vector<FPoly>>& rows, std::size_t cols) {
        PolyMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw dimension_error("ragged polynomial matrix");
            for (std::size_t j = 0; j < cols; ++j) {
                m(i, j) = rows[i][j];
                fp_trim(m(i, j));
            }
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    FPoly& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }
    const FPoly& operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }

    std::vector<FPoly> row(std::size_t i) const {
        return std::vector<FPoly>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                  a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    void set_row(std::size_t i, const std::vector<FPoly>& r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
    }
    bool row_is_zero(std::size_t i) const {
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).empty()) return false;
        return true;
    }
    std::size_t max_degree() const {
        std::int64_t d = 0;
        for (const auto& p : a_) d = std::max(d, fp_deg(p));
        return static_cast<std::size_t>(d);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    /// row_i += q row_j
    void add_row_multiple(const Field& F, std::size_t i, const FPoly& q, std::size_t j) {
        if (q.empty()) return;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(j, c).empty()) (*this)(i, c) = fp_add(F, (*this)(i, c), fp_mul(F, q, (*this)(j, c)));
    }
    /// col_i += q col_j
    void add_col_multiple(const Field& F, std::size_t i, const FPoly& q, std::size_t j) {
        if (q.empty()) return;
        for (std::size_t r = 0; r < rows_; ++r)
            if (!(*this)(r, j).empty()) (*this)(r, i) = fp_add(F, (*this)(r, i), fp_mul(F, q, (*this)(r, j)));
    }
    void scale_row(const Field& F, std::size_t i, Elem c) {
        for (std::size_t col = 0; col < cols_; ++col) (*this)(i, col) = fp_scale(F, c, (*this)(i, col));
    }
    void scale_col(const Field& F, std::size_t j, Elem c) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = fp_scale(F, c, (*this)(r, j));
    }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

   private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FPoly> a_;
};

inline PolyMatrix pm_mul(const Field& F, const PolyMatrix& A, const PolyMatrix& B) {
    if (A.cols() != B.rows()) throw dimension_error("polynomial matrix product shape mismatch");
    PolyMatrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t l = 0; l < A.cols(); ++l) {
            if (A(i, l).empty()) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                if (!B(l, j).empty()) C(i, j) = fp_add(F, C(i, j), fp_mul(F, A(i, l), B(l, j)));
        }
    return C;
}

/// x G for a row x of polynomials.
inline std::vector<FPoly> pm_row_times(const Field& F, const std::vector<FPoly>& x, const PolyMatrix& G) {
    if (x.size() != G.rows()) throw dimension_error("row length does not match the generator count");
    std::vector<FPoly> r(G.cols());
    for (std::size_t i = 0; i < G.rows(); ++i) {
        if (x[i].empty()) continue;
        for (std::size_t j = 0; j < G.cols(); ++j)
            if (!G(i, j).empty()) r[j] = fp_add(F, r[j], fp_mul(F, x[i], G(i, j)));
    }
    return r;
}

/// Determinant by fraction-free elimination (every division is exact).
inline FPoly pm_det(const Field& F, PolyMatrix M) {
    if (M.rows() != M.cols()) throw dimension_error("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return FPoly{1};
    bool negate = false;
    FPoly prev{1};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && M(piv, k).empty()) ++piv;
        if (piv == n) return {};
        if (piv != k) {
            M.swap_rows(piv, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M(i, j) = fp_exact_div(F, fp_sub(F, fp_mul(F, M(k, k), M(i, j)), fp_mul(F, M(i, k), M(k, j))), prev);
            M(i, k) = {};
        }
        prev = M(k, k);
    }
    FPoly d = M(n - 1, n - 1);
    return negate ? fp_neg(F, d) : d;
}

/// Rank over the rational function field F(X), by fraction-free elimination.
inline std::size_t rank_over_fraction_field(const Field& F, PolyMatrix M) {
    std::size_t r = 0;
    FPoly prev{1};
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t piv = r;
        while (piv < M.rows() && M(piv, c).empty()) ++piv;
        if (piv == M.rows()) continue;
        M.swap_rows(piv, r);
        for (std::size_t i = r + 1; i < M.rows(); ++i) {
            for (std::size_t j = c + 1; j < M.cols(); ++j)
                M(i, j) = fp_exact_div(F, fp_sub(F, fp_mul(F, M(r, c), M(i, j)), fp_mul(F, M(i, c), M(r, j))), prev);
            M(i, c) = {};
        }
        prev = M(r, c);
        ++r;
    }
    return r;
}

/// U G = H, U unimodular, H in reduced row echelon form over F[X]: monic pivots, entries
/// above a pivot of smaller degree than it, zero rows last.
struct HermiteResult {
    PolyMatrix H, U;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

inline HermiteResult hermite_form(const Field& F, const PolyMatrix& G) {
    HermiteResult res{G, PolyMatrix::identity(G.rows()), {}};
    PolyMatrix& H = res.H;
    PolyMatrix& U = res.U;
    const std::size_t k = G.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < G.cols() && r < k; ++c) {
        while (true) {
            std::size_t best = k;
            for (std::size_t i = r; i < k; ++i)
                if (!H(i, c).empty() && (best == k || fp_deg(H(i, c)) < fp_deg(H(best, c)))) best = i;
            if (best == k) break;
            H.swap_rows(best, r);
            U.swap_rows(best, r);
            bool clean = true;
            for (std::size_t i = r + 1; i < k; ++i) {
                if (H(i, c).empty()) continue;
                const FPoly q = fp_neg(F, fp_divmod(F, H(i, c), H(r, c)).first);
                H.add_row_multiple(F, i, q, r);
                U.add_row_multiple(F, i, q, r);
                if (!H(i, c).empty()) clean = false;
            }
            if (clean) break;
        }
        if (r >= k || H(r, c).empty()) continue;
        const Elem inv = F.inv(H(r, c).back());
        H.scale_row(F, r, inv);
        U.scale_row(F, r, inv);
        for (std::size_t i = 0; i < r; ++i) {
            if (H(i, c).empty()) continue;
            const FPoly q = fp_neg(F, fp_divmod(F, H(i, c), H(r, c)).first);
            H.add_row_multiple(F, i, q, r);
            U.add_row_multiple(F, i, q, r);
        }
        res.pivots.push_back(c);
        ++r;
    }
    return res;
}

/// U G V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., monic, zeros last.
/// Vinv = V^{-1} is tracked alongside, so G = U^{-1} D Vinv.
struct SmithDecomposition {
    PolyMatrix U, D, V, Vinv;
    std::size_t rank = 0;
};

inline SmithDecomposition smith_form(const Field& F, const PolyMatrix& G) {
    const std::size_t k = G.rows(), n = G.cols();
    SmithDecomposition s{PolyMatrix::identity(k), G, PolyMatrix::identity(n), PolyMatrix::identity(n), 0};
    PolyMatrix& D = s.D;
    auto row_add = [&](std::size_t i, const FPoly& q, std::size_t j) {
        D.add_row_multiple(F, i, q, j);
        s.U.add_row_multiple(F, i, q, j);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        D.swap_rows(i, j);
        s.U.swap_rows(i, j);
    };
    // col_i += q col_j on D and V; on V^{-1} this is row_j -= q row_i.
    auto col_add = [&](std::size_t i, const FPoly& q, std::size_t j) {
        D.add_col_multiple(F, i, q, j);
        s.V.add_col_multiple(F, i, q, j);
        s.Vinv.add_row_multiple(F, j, fp_neg(F, q), i);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        D.swap_cols(i, j);
        s.V.swap_cols(i, j);
        s.Vinv.swap_rows(i, j);
    };
    for (std::size_t t = 0; t < std::min(k, n); ++t) {
        // smallest-degree entry of the trailing block
        std::size_t bi = k, bj = n;
        for (std::size_t i = t; i < k; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (!D(i, j).empty() && (bi == k || fp_deg(D(i, j)) < fp_deg(D(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi == k) break;
        row_swap(t, bi);
        col_swap(t, bj);
        while (true) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < k; ++i) {
                if (D(i, t).empty()) continue;
                row_add(i, fp_neg(F, fp_divmod(F, D(i, t), D(t, t)).first), t);
                if (!D(i, t).empty()) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j).empty()) continue;
                col_add(j, fp_neg(F, fp_divmod(F, D(t, j), D(t, t)).first), t);
                if (!D(t, j).empty()) dirty = true;
            }
            if (dirty) {
                // a remainder of smaller degree now sits in row or column t
                std::size_t bi2 = t, bj2 = t;
                for (std::size_t i = t + 1; i < k; ++i)
                    if (!D(i, t).empty() && fp_deg(D(i, t)) < fp_deg(D(bi2, bj2))) {
                        bi2 = i;
                        bj2 = t;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!D(t, j).empty() && fp_deg(D(t, j)) < fp_deg(D(bi2, bj2))) {
                        bi2 = t;
                        bj2 = j;
                    }
                row_swap(t, bi2);
                col_swap(t, bj2);
                continue;
            }
            // divisibility of the rest of the block
            std::size_t wi = k;
            for (std::size_t i = t + 1; i < k && wi == k; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!fp_divides(F, D(t, t), D(i, j))) {
                        wi = i;
                        break;
                    }
            if (wi == k) break;
            row_add(t, FPoly{1}, wi);
        }
        const Elem inv = F.inv(D(t, t).back());
        D.scale_row(F, t, inv);
        s.U.scale_row(F, t, inv);
        ++s.rank;
    }
    return s;
}

/// x with x G = v, or nothing.
inline std::optional<std::vector<FPoly>> membership(const Field& F, const std::vector<FPoly>& v, const PolyMatrix& G) {
    if (v.size() != G.cols()) throw dimension_error("vector length does not match the matrix width");
    const auto h = hermite_form(F, G);
    std::vector<FPoly> residual = v;
    for (auto& p : residual) fp_trim(p);
    std::vector<FPoly> y(G.rows());
    for (std::size_t i = 0; i < h.pivots.size(); ++i) {
        const std::size_t c = h.pivots[i];
        if (residual[c].empty()) continue;
        auto [q, rem] = fp_divmod(F, residual[c], h.H(i, c));
        if (!rem.empty()) return std::nullopt;
        y[i] = q;
        for (std::size_t j = 0; j < G.cols(); ++j)
            if (!h.H(i, j).empty()) residual[j] = fp_sub(F, residual[j], fp_mul(F, q, h.H(i, j)));
    }
    for (const auto& p : residual)
        if (!p.empty()) return std::nullopt;
    return pm_row_times(F, y, h.U);
}

/// Nonzero rows of the Hermite form: the canonical basis of the row module.
inline PolyMatrix row_module_basis(const Field& F, const PolyMatrix& G) {
    const auto h = hermite_form(F, G);
    PolyMatrix B(h.pivots.size(), G.cols());
    for (std::size_t i = 0; i < h.pivots.size(); ++i) B.set_row(i, h.H.row(i));
    return B;
}

/// Smallest direct summand of F^n[X] containing the row module of G: the F(X)-span
/// intersected with F^n[X], read off as the first rank rows of V^{-1}.
inline PolyMatrix closure(const Field& F, const PolyMatrix& G) {
    const auto s = smith_form(F, G);
    PolyMatrix B(s.rank, G.cols());
    for (std::size_t i = 0; i < s.rank; ++i) B.set_row(i, s.Vinv.row(i));
    return row_module_basis(F, B);
}

/// Rows independent and all invariant factors units.
inline bool is_direct_summand(const Field& F, const PolyMatrix& G) {
    const auto s = smith_form(F, G);
    if (s.rank != G.rows()) return false;
    for (std::size_t i = 0; i < s.rank; ++i)
        if (fp_deg(s.D(i, i)) != 0) return false;
    return true;
}

/// Same row module?
inline bool same_row_module(const Field& F, const PolyMatrix& A, const PolyMatrix& B) {
    return row_module_basis(F, A) == row_module_basis(F, B);
}

}  // namespace skl

#endif
