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

#ifndef SKL_MATRIX_HPP
#define SKL_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace skl {

/// Coordinate vector over a field (raw codes).
using Vec = std::vector<Elem>;

inline bool is_zero(std::span<const Elem> v) noexcept {
    for (Elem x : v)
        if (x != 0) return false;
    return true;
}

inline void add_into(const Field& F, Vec& acc, std::span<const Elem> v) {
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] = F.add(acc[i], v[i]);
}

/// acc += c * v
inline void axpy(const Field& F, Vec& acc, Elem c, std::span<const Elem> v) {
    if (c == 0) return;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) acc[i] = F.add(acc[i], F.mul(c, v[i]));
}

inline Vec vec_add(const Field& F, std::span<const Elem> a, std::span<const Elem> b) {
    Vec r(a.begin(), a.end());
    add_into(F, r, b);
    return r;
}

inline Vec vec_sub(const Field& F, std::span<const Elem> a, std::span<const Elem> b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return r;
}

inline Vec vec_neg(const Field& F, std::span<const Elem> a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.neg(a[i]);
    return r;
}

inline Vec vec_scale(const Field& F, Elem c, std::span<const Elem> a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
    return r;
}

/// Dense row-major matrix of field codes. The field is supplied by the caller of each
/// operation; a LinearMap on an r-dimensional space stores the image of basis vector j
/// in column j.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix from_columns(const std::vector<Vec>& cols) {
        if (cols.empty()) return {};
        Matrix m(cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_) throw dimension_error("ragged column list");
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }
    static Matrix from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) return {};
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw dimension_error("ragged row list");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Elem& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }

    std::span<const Elem> row(std::size_t i) const noexcept { return {a_.data() + i * cols_, cols_}; }
    Vec column(std::size_t j) const {
        Vec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    bool is_zero() const noexcept { return skl::is_zero(a_); }

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

using LinearMap = Matrix;

inline Matrix mat_mul(const Field& F, const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) throw dimension_error("matrix product shape mismatch");
    Matrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t l = 0; l < A.cols(); ++l) {
            const Elem a = A(i, l);
            if (a == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                if (B(l, j) != 0) C(i, j) = F.add(C(i, j), F.mul(a, B(l, j)));
        }
    return C;
}

inline Matrix mat_add(const Field& F, const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw dimension_error("matrix sum shape mismatch");
    Matrix C(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = F.add(A(i, j), B(i, j));
    return C;
}

inline Matrix mat_neg(const Field& F, const Matrix& A) {
    Matrix C(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = F.neg(A(i, j));
    return C;
}

inline Matrix mat_sub(const Field& F, const Matrix& A, const Matrix& B) { return mat_add(F, A, mat_neg(F, B)); }

inline Matrix mat_pow(const Field& F, const Matrix& A, std::size_t e) {
    Matrix R = Matrix::identity(A.rows());
    for (std::size_t i = 0; i < e; ++i) R = mat_mul(F, A, R);
    return R;
}

/// A * v (column convention).
inline Vec apply(const Field& F, const Matrix& A, std::span<const Elem> v) {
    if (A.cols() != v.size()) throw dimension_error("matrix-vector shape mismatch");
    Vec r(A.rows(), 0);
    for (std::size_t j = 0; j < A.cols(); ++j) {
        const Elem x = v[j];
        if (x == 0) continue;
        for (std::size_t i = 0; i < A.rows(); ++i)
            if (A(i, j) != 0) r[i] = F.add(r[i], F.mul(A(i, j), x));
    }
    return r;
}

/// v * A (row convention).
inline Vec row_apply(const Field& F, std::span<const Elem> v, const Matrix& A) {
    if (A.rows() != v.size()) throw dimension_error("vector-matrix shape mismatch");
    Vec r(A.cols(), 0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        const Elem x = v[i];
        if (x == 0) continue;
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (A(i, j) != 0) r[j] = F.add(r[j], F.mul(x, A(i, j)));
    }
    return r;
}

namespace detail {

/// In-place reduced row echelon form; returns pivot columns in order.
inline std::vector<std::size_t> rref(const Field& F, Matrix& M) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t piv = r;
        while (piv < M.rows() && M(piv, c) == 0) ++piv;
        if (piv == M.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(r, j), M(piv, j));
        const Elem inv = F.inv(M(r, c));
        for (std::size_t j = 0; j < M.cols(); ++j) M(r, j) = F.mul(inv, M(r, j));
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == r || M(i, c) == 0) continue;
            const Elem f = F.neg(M(i, c));
            for (std::size_t j = 0; j < M.cols(); ++j)
                if (M(r, j) != 0) M(i, j) = F.add(M(i, j), F.mul(f, M(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(const Field& F, Matrix M) { return detail::rref(F, M).size(); }

inline std::optional<Matrix> inverse(const Field& F, const Matrix& A) {
    if (!A.square()) throw dimension_error("inverse of a non-square matrix");
    const std::size_t n = A.rows();
    Matrix M(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M(i, j) = A(i, j);
        M(i, n + i) = 1;
    }
    const auto piv = detail::rref(F, M);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
    Matrix R(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) R(i, j) = M(i, n + j);
    return R;
}

/// Basis of {x : A x = 0}, one vector per free column, in increasing free-column order.
inline std::vector<Vec> kernel(const Field& F, Matrix A) {
    const auto piv = detail::rref(F, A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < A.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec x(A.cols(), 0);
        x[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = F.neg(A(r, f));
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Some x with A x = b (free variables set to zero), or nothing.
inline std::optional<Vec> solve(const Field& F, const Matrix& A, std::span<const Elem> b) {
    if (b.size() != A.rows()) throw dimension_error("right-hand side length mismatch");
    Matrix M(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) M(i, j) = A(i, j);
        M(i, A.cols()) = b[i];
    }
    const auto piv = detail::rref(F, M);
    if (!piv.empty() && piv.back() == A.cols()) return std::nullopt;
    Vec x(A.cols(), 0);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = M(r, A.cols());
    return x;
}

}  // namespace skl

#endif
