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
 * @file text.hpp
 * @brief Canonical text for ring and module elements, and a parser for sums of
 * "coef*X^e" terms.
 *
 * Polynomials print with descending powers ("E21*X + 1"), series and Laurent series
 * with ascending powers and a trailing "O(X^hi)".
 */

#ifndef SKL_TEXT_HPP
#define SKL_TEXT_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "fxlinalg.hpp"
#include "modact.hpp"
#include "skewlaurent.hpp"
#include "skewpoly.hpp"
#include "skewseries.hpp"

namespace skl {

inline std::string x_power_string(std::int64_t e) {
    if (e == 0) return "";
    if (e == 1) return "X";
    return "X^" + std::to_string(e);
}

namespace detail {

inline std::string term_string(const std::string& coef, std::int64_t e) {
    if (e == 0) return coef;
    if (coef == "1") return x_power_string(e);
    const bool compound = coef.find(" + ") != std::string::npos || coef.find(" - ") != std::string::npos;
    return (compound ? "(" + coef + ")" : coef) + "*" + x_power_string(e);
}

inline std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += " + ";
        out += t;
    }
    return out;
}

}  // namespace detail

/// "(c0, c1, ...)" over F.
inline std::string vector_string(const Field& F, std::span<const Elem> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += F.to_string(v[i]);
    }
    return out + ")";
}

inline std::string to_string(const Algebra& A, const SkewPoly& f) {
    std::vector<std::string> terms;
    for (std::size_t i = f.size(); i-- > 0;)
        if (!is_zero(f.coeffs[i])) terms.push_back(detail::term_string(A.to_string(f.coeffs[i]), static_cast<std::int64_t>(i)));
    return detail::join_terms(terms);
}

inline std::string to_string(const Algebra& A, const TruncSeries& s) {
    std::vector<std::string> terms;
    for (std::size_t i = 0; i < s.prec(); ++i)
        if (!is_zero(s.coeffs[i])) terms.push_back(detail::term_string(A.to_string(s.coeffs[i]), static_cast<std::int64_t>(i)));
    std::string body = terms.empty() ? "" : detail::join_terms(terms) + " + ";
    return body + "O(" + (s.prec() == 0 ? std::string("1") : x_power_string(static_cast<std::int64_t>(s.prec()))) + ")";
}

inline std::string to_string(const Algebra& A, const TruncLaurent& s) {
    std::vector<std::string> terms;
    for (std::size_t i = 0; i < s.window(); ++i)
        if (!is_zero(s.coeffs[i]))
            terms.push_back(detail::term_string(A.to_string(s.coeffs[i]), s.ord + static_cast<std::int64_t>(i)));
    std::string body = terms.empty() ? "" : detail::join_terms(terms) + " + ";
    return body + "O(" + (s.hi() == 0 ? std::string("1") : x_power_string(s.hi())) + ")";
}

inline std::string to_string(const Field& F, const VecPoly& v) {
    std::vector<std::string> terms;
    for (std::size_t i = v.size(); i-- > 0;)
        if (!is_zero(v.coeffs[i])) terms.push_back(detail::term_string(vector_string(F, v.coeffs[i]), static_cast<std::int64_t>(i)));
    return detail::join_terms(terms);
}

/// Row of F[X] entries: "[X + 1, 0, X^2]".
inline std::string row_string(const Field& F, const std::vector<FPoly>& row) {
    std::string out = "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) out += ", ";
        out += fp_to_string(F, row[j]);
    }
    return out + "]";
}

namespace detail {

/// Splits "t1 + t2 - t3" at top-level signs (not inside parentheses, not an exponent sign).
/// Returns (negated, term) pairs with whitespace removed.
inline std::vector<std::pair<bool, std::string>> split_terms(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw parse_error("empty expression");
    std::vector<std::pair<bool, std::string>> out;
    int depth = 0;
    bool neg = false;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') {
            if (--depth < 0) throw parse_error("unbalanced ')' in '" + s + "'");
        }
        const bool sign = (c == '+' || c == '-') && depth == 0 && !(i > 0 && s[i - 1] == '^');
        if (sign) {
            if (!cur.empty()) out.emplace_back(neg, cur);
            else if (i != 0) throw parse_error("dangling sign in '" + s + "'");
            cur.clear();
            neg = c == '-';
            continue;
        }
        cur.push_back(c);
    }
    if (depth != 0) throw parse_error("unbalanced '(' in '" + s + "'");
    if (cur.empty()) throw parse_error("dangling sign in '" + s + "'");
    out.emplace_back(neg, cur);
    return out;
}

/// "coef*X^e", "X^e", "coef" -> (coef text or "", e).
inline std::pair<std::string, std::int64_t> split_x_power(const std::string& term, char var = 'X') {
    // find a top-level var that is not part of a longer identifier
    int depth = 0;
    for (std::size_t i = 0; i < term.size(); ++i) {
        const char c = term[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth != 0 || c != var) continue;
        if (i > 0 && term[i - 1] != '*') continue;
        std::size_t j = i + 1;
        std::int64_t e = 1;
        if (j < term.size()) {
            if (term[j] != '^') continue;
            ++j;
            std::size_t k = j;
            if (k < term.size() && term[k] == '-') ++k;
            if (k == term.size() || !std::isdigit(static_cast<unsigned char>(term[k])))
                throw parse_error("bad exponent in '" + term + "'");
            while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
            if (k != term.size()) throw parse_error("'" + std::string(1, var) + "' must end a term in '" + term + "'");
            e = std::stoll(term.substr(j, k - j));
        }
        std::string coef = term.substr(0, i);
        if (!coef.empty()) {
            if (coef.back() != '*') throw parse_error("expected '*' before " + std::string(1, var) + " in '" + term + "'");
            coef.pop_back();
        }
        return {coef, e};
    }
    return {term, 0};
}

inline std::string strip_parens(std::string s) {
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool outer = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0 && i + 1 < s.size()) {
                outer = false;
                break;
            }
        }
        if (!outer) break;
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

}  // namespace detail

/// Laurent polynomial sum_e c_e X^e in A as (lowest exponent, coefficients).
inline std::pair<std::int64_t, std::vector<Vec>> parse_laurent_terms(const Algebra& A, std::string_view text) {
    std::vector<std::pair<std::int64_t, Vec>> terms;
    for (const auto& [neg, t] : detail::split_terms(text)) {
        auto [coef, e] = detail::split_x_power(t);
        Vec c = coef.empty() ? A.unit() : A.parse(detail::strip_parens(coef));
        if (neg) c = A.neg(c);
        terms.emplace_back(e, std::move(c));
    }
    std::int64_t lo = terms.front().first, hi = lo;
    for (const auto& t : terms) {
        lo = std::min(lo, t.first);
        hi = std::max(hi, t.first);
    }
    std::vector<Vec> c(static_cast<std::size_t>(hi - lo + 1), A.zero());
    for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] = A.add(c[static_cast<std::size_t>(e - lo)], v);
    return {lo, std::move(c)};
}

inline SkewPoly parse_skew_poly(const Algebra& A, std::string_view text) {
    auto [lo, c] = parse_laurent_terms(A, text);
    if (lo < 0) throw parse_error("negative power of X in a polynomial: '" + std::string(text) + "'");
    std::vector<Vec> full(static_cast<std::size_t>(lo), A.zero());
    full.insert(full.end(), c.begin(), c.end());
    return SkewPoly(std::move(full));
}

/// Polynomial over F in X, e.g. "X^2 + a*X + 1".
inline FPoly parse_fpoly(const Field& F, std::string_view text) {
    FPoly r;
    for (const auto& [neg, t] : detail::split_terms(text)) {
        auto [coef, e] = detail::split_x_power(t);
        if (e < 0) throw parse_error("negative power in a polynomial over the field: '" + std::string(text) + "'");
        Elem c = coef.empty() ? 1 : F.parse(detail::strip_parens(coef));
        if (neg) c = F.neg(c);
        r = fp_add(F, r, fp_monomial(c, static_cast<std::size_t>(e)));
    }
    return r;
}

}  // namespace skl

#endif
