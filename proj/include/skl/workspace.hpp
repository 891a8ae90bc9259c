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
 * @file workspace.hpp
 * @brief Self-describing JSON input files: field, algebra, (sigma, delta), optional
 * module, precision and code payload. Needs nlohmann/json ("json.hpp") on the include path.
 *
 * Schema errors name the JSON pointer of the offending value; syntax errors keep the
 * line and column reported by the JSON parser.
 */

#ifndef SKL_WORKSPACE_HPP
#define SKL_WORKSPACE_HPP

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"
#include "codes.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "fxlinalg.hpp"
#include "modact.hpp"
#include "skewmap.hpp"
#include "text.hpp"

namespace skl {

struct Workspace {
    std::shared_ptr<const Field> field;
    std::shared_ptr<const Algebra> algebra;
    LinearMap sigma, delta;
    std::optional<RightModuleSpec> module;
    std::size_t precision = 8;
    std::optional<PolyMatrix> generators;
    std::optional<std::vector<FPoly>> message;
    std::string name;
};

namespace detail {

using json = nlohmann::json;

inline const json& need(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw parse_error(where + ": missing key '" + key + "'");
    return j.at(key);
}

inline std::string need_string(const json& j, const std::string& key, const std::string& where) {
    const auto& v = need(j, key, where);
    if (!v.is_string()) throw parse_error(where + "/" + key + ": expected a string");
    return v.get<std::string>();
}

inline std::size_t need_size(const json& j, const std::string& key, const std::string& where) {
    const auto& v = need(j, key, where);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw parse_error(where + "/" + key + ": expected a non-negative integer");
    return v.get<std::size_t>();
}

inline Elem field_value(const Field& F, const json& v, const std::string& where) {
    try {
        if (v.is_number_integer()) return F.from_int(v.get<std::int64_t>());
        if (v.is_string()) return F.parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw parse_error(where + ": " + e.what());
    }
    throw parse_error(where + ": expected a field element (integer or string)");
}

inline Matrix matrix_value(const Field& F, const json& v, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!v.is_array() || v.size() != rows) throw parse_error(where + ": expected " + std::to_string(rows) + " rows");
    Matrix M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!v[i].is_array() || v[i].size() != cols)
            throw parse_error(where + "/" + std::to_string(i) + ": expected " + std::to_string(cols) + " entries");
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = field_value(F, v[i][j], where + "/" + std::to_string(i) + "/" + std::to_string(j));
    }
    return M;
}

inline AlgebraElement algebra_value(const Algebra& A, const json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return A.parse(v.get<std::string>());
        } catch (const std::exception& e) {
            throw parse_error(where + ": " + e.what());
        }
    }
    try {
        if (v.is_array()) {
            if (v.size() != A.dim()) throw parse_error("expected " + std::to_string(A.dim()) + " coordinates");
            AlgebraElement x(A.dim());
            for (std::size_t i = 0; i < A.dim(); ++i) x[i] = field_value(A.field(), v[i], where + "/" + std::to_string(i));
            return x;
        }
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception& e) {
        throw parse_error(where + ": " + e.what());
    }
    throw parse_error(where + ": expected an algebra element (string or coordinate list)");
}

inline std::shared_ptr<const Field> field_from(const json& j) {
    const std::string w = "/field";
    const std::uint32_t p = static_cast<std::uint32_t>(need_size(j, "p", w));
    const std::uint32_t k = j.contains("k") ? static_cast<std::uint32_t>(need_size(j, "k", w)) : 1;
    const std::string sym = j.contains("symbol") ? need_string(j, "symbol", w) : "a";
    try {
        if (j.contains("modulus")) {
            FieldSpec spec{p, k, j.at("modulus").get<std::vector<std::uint32_t>>()};
            return Field::make(spec, sym);
        }
        return Field::gf(p, k, sym);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(w + "/modulus: " + e.what());
    }
}

inline std::shared_ptr<const Algebra> algebra_from(const std::shared_ptr<const Field>& F, const json& j) {
    const std::string w = "/algebra";
    const std::string kind = need_string(j, "kind", w);
    std::shared_ptr<const Algebra> A;
    if (kind == "matrix") {
        A = matrix_algebra(F, need_size(j, "n", w));
    } else if (kind == "group_cyclic") {
        A = group_algebra_cyclic(F, need_size(j, "n", w), j.contains("generator") ? need_string(j, "generator", w) : "g");
    } else if (kind == "quotient_yz") {
        A = quotient_algebra_yz(F);
    } else if (kind == "quotient_tn") {
        const auto& m = need(j, "modulus", w);
        if (!m.is_array()) throw parse_error(w + "/modulus: expected a coefficient list");
        Vec f;
        for (std::size_t i = 0; i < m.size(); ++i) f.push_back(field_value(*F, m[i], w + "/modulus/" + std::to_string(i)));
        A = quotient_algebra_tn(F, f, j.contains("variable") ? need_string(j, "variable", w) : "t");
    } else if (kind == "tensor") {
        const auto& labels = need(j, "labels", w);
        if (!labels.is_array()) throw parse_error(w + "/labels: expected a list of strings");
        const auto L = labels.get<std::vector<std::string>>();
        const std::size_t r = L.size();
        const auto& t = need(j, "tensor", w);
        if (!t.is_array() || t.size() != r) throw parse_error(w + "/tensor: expected " + std::to_string(r) + " rows");
        std::vector<std::vector<Vec>> tensor(r, std::vector<Vec>(r, Vec(r, 0)));
        for (std::size_t a = 0; a < r; ++a) {
            if (!t[a].is_array() || t[a].size() != r) throw parse_error(w + "/tensor/" + std::to_string(a) + ": expected " + std::to_string(r) + " entries");
            for (std::size_t b = 0; b < r; ++b) {
                const auto& c = t[a][b];
                const std::string wc = w + "/tensor/" + std::to_string(a) + "/" + std::to_string(b);
                if (!c.is_array() || c.size() != r) throw parse_error(wc + ": expected " + std::to_string(r) + " coordinates");
                for (std::size_t l = 0; l < r; ++l) tensor[a][b][l] = field_value(*F, c[l], wc + "/" + std::to_string(l));
            }
        }
        const auto& u = need(j, "unit", w);
        if (!u.is_array() || u.size() != r) throw parse_error(w + "/unit: expected " + std::to_string(r) + " coordinates");
        Vec unit(r);
        for (std::size_t l = 0; l < r; ++l) unit[l] = field_value(*F, u[l], w + "/unit/" + std::to_string(l));
        A = Algebra::make(F, L, tensor, unit);
    } else {
        throw parse_error(w + "/kind: unknown algebra kind '" + kind + "'");
    }
    if (j.contains("restrict") && j.at("restrict").is_boolean() && j.at("restrict").get<bool>()) {
        if (F->k() == 1) throw parse_error(w + "/restrict: the field is already prime");
        A = restrict_scalars(A);
    }
    return A;
}

inline LinearMap map_from(const Algebra& A, const json& j, const std::string& w, const LinearMap* sigma) {
    const std::string kind = need_string(j, "kind", w);
    const std::size_t r = A.dim();
    if (kind == "identity") return Matrix::identity(r);
    if (kind == "zero") return Matrix(r, r);
    if (kind == "frobenius") {
        if (!A.restriction()) throw parse_error(w + ": the entrywise Frobenius needs a restricted algebra (\"restrict\": true)");
        return componentwise_frobenius(A);
    }
    if (kind == "matrix") return matrix_value(A.field(), need(j, "matrix", w), r, r, w + "/matrix");
    if (kind == "images") {
        const auto& im = need(j, "images", w);
        if (!im.is_array() || im.size() != r) throw parse_error(w + "/images: expected " + std::to_string(r) + " images, one per basis element");
        std::vector<Vec> cols;
        for (std::size_t i = 0; i < r; ++i) cols.push_back(algebra_value(A, im[i], w + "/images/" + std::to_string(i)));
        return Matrix::from_columns(cols);
    }
    if (kind == "inner") {
        if (!sigma) throw parse_error(w + ": sigma cannot be inner");
        return inner_derivation(A, *sigma, algebra_value(A, need(j, "element", w), w + "/element"));
    }
    throw parse_error(w + "/kind: unknown map kind '" + kind + "'");
}

inline RightModuleSpec module_from(const std::shared_ptr<const Algebra>& A, const json& j) {
    const std::string w = "/module";
    const std::string kind = need_string(j, "kind", w);
    if (kind == "regular") return regular_module(A);
    if (kind == "matrix_rows") {
        const auto& res = A->restriction();
        const std::size_t base_dim = res ? A->dim() / res->ext->k() : A->dim();
        std::size_t n = 0;
        while (n * n < base_dim) ++n;
        return matrix_row_module(A, n);
    }
    if (kind == "trivial") return trivial_action_module(A, need_size(j, "n", w));
    if (kind == "matrices") {
        const std::size_t n = need_size(j, "n", w);
        const auto& act = need(j, "action", w);
        if (!act.is_array() || act.size() != A->dim())
            throw parse_error(w + "/action: expected " + std::to_string(A->dim()) + " matrices");
        std::vector<Matrix> R;
        for (std::size_t i = 0; i < A->dim(); ++i)
            R.push_back(matrix_value(A->field(), act[i], n, n, w + "/action/" + std::to_string(i)));
        return RightModuleSpec(A, n, std::move(R));
    }
    throw parse_error(w + "/kind: unknown module kind '" + kind + "'");
}

inline std::vector<FPoly> fpoly_row(const Field& F, const json& row, const std::string& w) {
    if (!row.is_array()) throw parse_error(w + ": expected a list of polynomials");
    std::vector<FPoly> out;
    for (std::size_t j = 0; j < row.size(); ++j) {
        const auto& e = row[j];
        const std::string wj = w + "/" + std::to_string(j);
        try {
            if (e.is_string()) out.push_back(parse_fpoly(F, e.get<std::string>()));
            else if (e.is_number_integer()) out.push_back(fp_const(F.from_int(e.get<std::int64_t>())));
            else throw parse_error("expected a polynomial string");
        } catch (const std::exception& ex) {
            throw parse_error(wj + ": " + ex.what());
        }
    }
    return out;
}

}  // namespace detail

inline Workspace load_workspace_text(const std::string& text, const std::string& name = "<input>") {
    detail::json j;
    try {
        j = detail::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(name + ": " + e.what());
    }
    try {
        Workspace ws;
        ws.name = name;
        ws.field = detail::field_from(detail::need(j, "field", ""));
        ws.algebra = detail::algebra_from(ws.field, detail::need(j, "algebra", ""));
        ws.field = ws.algebra->field_ptr();  // the prime field after "restrict"
        ws.sigma = detail::map_from(*ws.algebra, detail::need(j, "sigma", ""), "/sigma", nullptr);
        ws.delta = detail::map_from(*ws.algebra, detail::need(j, "delta", ""), "/delta", &ws.sigma);
        if (j.contains("module")) ws.module = detail::module_from(ws.algebra, j.at("module"));
        if (j.contains("precision")) ws.precision = detail::need_size(j, "precision", "");
        if (j.contains("code")) {
            const auto& c = j.at("code");
            const std::size_t n = ws.module ? ws.module->n() : 0;
            if (c.contains("generators")) {
                if (!ws.module) throw parse_error("/code: a module is required");
                const auto& g = c.at("generators");
                if (!g.is_array()) throw parse_error("/code/generators: expected a list of rows");
                std::vector<std::vector<FPoly>> rows;
                for (std::size_t i = 0; i < g.size(); ++i) {
                    rows.push_back(detail::fpoly_row(*ws.field, g[i], "/code/generators/" + std::to_string(i)));
                    if (rows.back().size() != n)
                        throw parse_error("/code/generators/" + std::to_string(i) + ": expected " + std::to_string(n) + " entries");
                }
                ws.generators = PolyMatrix::from_rows(rows, n);
            }
            if (c.contains("message")) ws.message = detail::fpoly_row(*ws.field, c.at("message"), "/code/message");
        }
        return ws;
    } catch (const parse_error& e) {
        throw parse_error(name + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw parse_error(name + ": " + e.what());
    } catch (const std::domain_error& e) {
        throw parse_error(name + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(name + ": " + e.what());
    }
}

inline Workspace load_workspace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_workspace_text(ss.str(), path);
}

}  // namespace skl

#endif
