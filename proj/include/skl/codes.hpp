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
 * @file codes.hpp
 * @brief (sigma, delta, A)-cyclic convolutional codes, stored by their polynomial side
 * C = D cap F^n[X].
 *
 * C is stable when C . a is inside C for every a in A. Because C is an F[X]-module and
 * every element of A[X; sigma, delta] is a sum of terms a X^i, checking the rows of a
 * basis against the basis elements of A is enough.
 */

#ifndef SKL_CODES_HPP
#define SKL_CODES_HPP

#include <string>
#include <vector>

#include "errors.hpp"
#include "fxlinalg.hpp"
#include "modact.hpp"
#include "skewmap.hpp"

namespace skl {

/// Row of polynomials (one per coordinate) -> polynomial with vector coefficients.
inline VecPoly row_to_vecpoly(const std::vector<FPoly>& row) {
    std::size_t len = 0;
    for (const auto& p : row) len = std::max(len, p.size());
    std::vector<Vec> c(len, Vec(row.size(), 0));
    for (std::size_t j = 0; j < row.size(); ++j)
        for (std::size_t i = 0; i < row[j].size(); ++i) c[i][j] = row[j][i];
    return VecPoly(std::move(c));
}

inline std::vector<FPoly> vecpoly_to_row(const VecPoly& v, std::size_t n) {
    std::vector<FPoly> row(n);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (v.coeffs[i][j] != 0) {
                if (row[j].size() <= i) row[j].resize(i + 1, 0);
                row[j][i] = v.coeffs[i][j];
            }
    return row;
}

inline PolyMatrix rows_to_matrix(const std::vector<VecPoly>& rows, std::size_t n) {
    PolyMatrix G(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) G.set_row(i, vecpoly_to_row(rows[i], n));
    return G;
}

/// An F[X]-basis of C (Hermite form) with its flags.
struct ConvCodeBasis {
    PolyMatrix G;
    bool pure = false;
    bool stable = false;
    std::size_t k() const noexcept { return G.rows(); }
    std::size_t n() const noexcept { return G.cols(); }
};

/// g . a_j stays in the row module for every row g and basis element a_j.
inline bool is_cyclic_submodule(const SkewContext& ctx, const RightModuleSpec& M, const PolyMatrix& G) {
    if (G.cols() != M.n()) throw dimension_error("generator width " + std::to_string(G.cols()) + " but module rank " + std::to_string(M.n()));
    const Field& F = ctx.field();
    for (std::size_t i = 0; i < G.rows(); ++i) {
        const VecPoly g = row_to_vecpoly(G.row(i));
        for (std::size_t j = 0; j < ctx.dim(); ++j) {
            const VecPoly w = vecpoly_times_scalar(ctx, M, g, ctx.algebra().basis(j));
            if (!membership(F, vecpoly_to_row(w, M.n()), G)) return false;
        }
    }
    return true;
}

/// C = closure of the span of B, with flags.
inline ConvCodeBasis code_from_matrix(const SkewContext& ctx, const RightModuleSpec& M, const PolyMatrix& B) {
    check_compatible(M, ctx);
    const Field& F = ctx.field();
    ConvCodeBasis C;
    C.G = closure(F, B);
    C.pure = is_direct_summand(F, C.G);
    C.stable = is_cyclic_submodule(ctx, M, C.G);
    return C;
}

inline ConvCodeBasis code_from_generators(const SkewContext& ctx, const RightModuleSpec& M,
                                          const std::vector<VecPoly>& B) {
    for (const auto& b : B) check_module_coeffs(M, b.coeffs);
    return code_from_matrix(ctx, M, rows_to_matrix(B, M.n()));
}

struct CyclicClosureResult {
    ConvCodeBasis code;
    std::vector<std::size_t> rank_trace;  // rank after each round
};

/// Smallest pure stable submodule containing B: alternately add every g . a_j and purify
/// until nothing changes. Ranks never drop, and two nested pure submodules of equal rank
/// coincide, so at most n + 1 rounds run.
inline CyclicClosureResult cyclic_closure(const SkewContext& ctx, const RightModuleSpec& M, const PolyMatrix& B) {
    check_compatible(M, ctx);
    if (B.cols() != M.n()) throw dimension_error("generator width does not match the module");
    const Field& F = ctx.field();
    CyclicClosureResult res;
    PolyMatrix C = closure(F, B);
    res.rank_trace.push_back(C.rows());
    for (std::size_t round = 0; round <= M.n() + 1; ++round) {
        std::vector<std::vector<FPoly>> rows;
        for (std::size_t i = 0; i < C.rows(); ++i) {
            rows.push_back(C.row(i));
            const VecPoly g = row_to_vecpoly(C.row(i));
            for (std::size_t j = 0; j < ctx.dim(); ++j)
                rows.push_back(vecpoly_to_row(vecpoly_times_scalar(ctx, M, g, ctx.algebra().basis(j)), M.n()));
        }
        PolyMatrix next = closure(F, PolyMatrix::from_rows(rows, M.n()));
        res.rank_trace.push_back(next.rows());
        if (next == C) {
            res.code.G = std::move(C);
            res.code.pure = is_direct_summand(F, res.code.G);
            res.code.stable = is_cyclic_submodule(ctx, M, res.code.G);
            return res;
        }
        C = std::move(next);
    }
    throw axiom_error("cyclic closure did not stabilize within n + 1 rounds");
}

inline CyclicClosureResult cyclic_closure(const SkewContext& ctx, const RightModuleSpec& M,
                                          const std::vector<VecPoly>& B) {
    for (const auto& b : B) check_module_coeffs(M, b.coeffs);
    return cyclic_closure(ctx, M, rows_to_matrix(B, M.n()));
}

struct RoundtripReport {
    bool pure = false;
    bool stable = false;
    bool closure_fixed = false;  // C* cap F^n[X] = C
    bool rank_matches = false;   // rank over F[X] = dimension over F((X))
    std::size_t rank_fx = 0;
    std::size_t rank_fraction_field = 0;
    bool passed() const noexcept { return pure && stable && closure_fixed && rank_matches; }
};

inline RoundtripReport correspondence_roundtrip(const SkewContext& ctx, const RightModuleSpec& M,
                                                const ConvCodeBasis& C) {
    const Field& F = ctx.field();
    RoundtripReport r;
    r.pure = is_direct_summand(F, C.G);
    r.stable = is_cyclic_submodule(ctx, M, C.G);
    r.closure_fixed = same_row_module(F, closure(F, C.G), C.G);
    r.rank_fx = row_module_basis(F, C.G).rows();
    r.rank_fraction_field = rank_over_fraction_field(F, C.G);
    r.rank_matches = r.rank_fx == r.rank_fraction_field;
    return r;
}

/// message . G
inline VecPoly encode(const Field& F, const std::vector<FPoly>& message, const ConvCodeBasis& C) {
    if (message.size() != C.k())
        throw dimension_error("message has " + std::to_string(message.size()) + " entries, code dimension is " +
                              std::to_string(C.k()));
    return row_to_vecpoly(pm_row_times(F, message, C.G));
}

}  // namespace skl

#endif
