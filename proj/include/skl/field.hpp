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
 * @file field.hpp
 * @brief Exact arithmetic in GF(p^k) = Z_p[x]/(modulus).
 *
 * An element is stored as a single integer code c = d_0 + d_1 p + ... + d_{k-1} p^{k-1},
 * where d_i is the coefficient of x^i of its reduced representative. Multiplication goes
 * through log/exp tables built once per field; inverses are computed by the extended
 * Euclidean algorithm on coefficient polynomials and cached in a table.
 *
 * Field objects are immutable after construction and are shared by std::shared_ptr.
 * Bulk code (matrices, algebra elements) works on raw codes (Elem) together with a
 * `const Field&`; FieldElement is the self-describing value type for user-facing code.
 */

#ifndef SKL_FIELD_HPP
#define SKL_FIELD_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace skl {

using Elem = std::uint32_t;

struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    // low -> high, length k+1, monic
    std::vector<std::uint32_t> modulus;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over Z_p as digit vectors, low -> high. Only used for construction and
// the Euclidean inverse; hot paths use tables.
using ZpPoly = std::vector<std::uint32_t>;

inline void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // p is prime and small; Fermat
    std::uint64_t r = 1, b = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

inline ZpPoly zp_mod(ZpPoly a, const ZpPoly& m, std::uint32_t p) {
    trim(a);
    ZpPoly mm = m;
    trim(mm);
    if (mm.empty()) throw zero_division_error("polynomial reduction by zero");
    const std::uint32_t lead_inv = inv_mod_p(mm.back(), p);
    while (a.size() >= mm.size()) {
        const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - mm.size();
        for (std::size_t i = 0; i < mm.size(); ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * mm[i] % p) % p);
        }
        trim(a);
    }
    return a;
}

inline ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    trim(r);
    return r;
}

inline ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b, std::uint32_t p) {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const std::uint32_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

inline std::pair<ZpPoly, ZpPoly> zp_divmod(ZpPoly a, const ZpPoly& m, std::uint32_t p) {
    trim(a);
    ZpPoly q;
    if (a.size() >= m.size()) q.assign(a.size() - m.size() + 1, 0);
    const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
    while (a.size() >= m.size()) {
        const std::uint32_t c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.back()) * lead_inv % p);
        const std::size_t shift = a.size() - m.size();
        q[shift] = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - static_cast<std::uint64_t>(c) * m[i] % p) % p);
        trim(a);
    }
    trim(q);
    return {q, a};
}

/// True iff the monic polynomial m of degree k has no monic divisor of degree 1..k/2.
inline bool is_irreducible(const ZpPoly& m, std::uint32_t p) {
    const std::size_t k = m.size() - 1;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            ZpPoly cand(d + 1, 0);
            std::uint64_t x = c;
            for (std::size_t i = 0; i < d; ++i) {
                cand[i] = static_cast<std::uint32_t>(x % p);
                x /= p;
            }
            cand[d] = 1;
            if (zp_mod(m, cand, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// First monic irreducible polynomial of degree k over Z_p, ordering candidates by the
/// integer code of their lower coefficients. Available for p^k <= 64.
inline std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k) {
    if (!detail::is_prime(p)) throw axiom_error("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw axiom_error("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= p;
    if (q > 64) throw axiom_error("no built-in modulus for p^k > 64; supply one explicitly");
    for (std::uint64_t c = 0; c < q; ++c) {
        detail::ZpPoly m(k + 1, 0);
        std::uint64_t x = c;
        for (std::uint32_t i = 0; i < k; ++i) {
            m[i] = static_cast<std::uint32_t>(x % p);
            x /= p;
        }
        m[k] = 1;
        if (detail::is_irreducible(m, p)) return m;
    }
    throw axiom_error("no irreducible polynomial found");  // unreachable for valid p, k
}

class Field {
   public:
    static constexpr std::uint64_t max_order = 1u << 20;

    static std::shared_ptr<const Field> make(FieldSpec spec, std::string symbol = "a") {
        return std::shared_ptr<const Field>(new Field(std::move(spec), std::move(symbol)));
    }

    /// GF(p^k) with the built-in modulus.
    static std::shared_ptr<const Field> gf(std::uint32_t p, std::uint32_t k = 1, std::string symbol = "a") {
        return make(FieldSpec{p, k, default_modulus(p, k)}, std::move(symbol));
    }

    const FieldSpec& spec() const noexcept { return spec_; }
    std::uint32_t p() const noexcept { return spec_.p; }
    std::uint32_t k() const noexcept { return spec_.k; }
    std::uint32_t order() const noexcept { return q_; }
    const std::string& symbol() const noexcept { return symbol_; }
    bool is_prime_field() const noexcept { return spec_.k == 1; }

    bool same_as(const Field& o) const noexcept { return this == &o || spec_ == o.spec_; }

    static constexpr Elem zero() noexcept { return 0; }
    static constexpr Elem one() noexcept { return 1; }

    /// The class of x; equals p as a code when k > 1.
    Elem generator() const { return spec_.k == 1 ? from_int(-static_cast<std::int64_t>(spec_.modulus[0])) : spec_.p; }

    Elem from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(spec_.p);
        if (r < 0) r += spec_.p;
        return static_cast<Elem>(r);
    }

    Elem from_coeffs(std::span<const std::uint32_t> c) const {
        detail::ZpPoly poly(c.begin(), c.end());
        for (auto& d : poly) d %= spec_.p;
        poly = detail::zp_mod(poly, spec_.modulus, spec_.p);
        return encode(poly);
    }

    std::vector<std::uint32_t> coeffs(Elem x) const {
        std::vector<std::uint32_t> d(spec_.k, 0);
        for (std::uint32_t i = 0; i < spec_.k; ++i) {
            d[i] = x % spec_.p;
            x /= spec_.p;
        }
        return d;
    }

    bool contains(Elem x) const noexcept { return x < q_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (spec_.p == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return digitwise(a, b, false);
    }
    Elem sub(Elem a, Elem b) const noexcept {
        if (spec_.p == 2) return a ^ b;
        return add(a, neg(b));
    }
    Elem neg(Elem a) const noexcept {
        if (spec_.p == 2) return a;
        return neg_table_[a];
    }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    Elem inv(Elem a) const {
        if (a == 0) throw zero_division_error("inverse of zero in " + name());
        return inv_[a];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::int64_t e) const {
        if (e < 0) {
            a = inv(a);
            e = -e;
        }
        if (a == 0) return e == 0 ? 1 : 0;
        const std::uint64_t n = q_ - 1;
        const std::uint64_t idx = (static_cast<std::uint64_t>(log_[a]) * (static_cast<std::uint64_t>(e) % n)) % n;
        return exp_[idx];
    }
    /// x -> x^p
    Elem frobenius(Elem a) const { return pow(a, spec_.p); }

    /// Polynomial in the generator symbol, highest power first ("a^2+a+1", "2*a+1").
    std::string to_string(Elem x) const {
        if (spec_.k == 1) return std::to_string(x);
        if (x == 0) return "0";
        const auto d = coeffs(x);
        std::string out;
        for (std::size_t i = d.size(); i-- > 0;) {
            if (d[i] == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += std::to_string(d[i]);
                continue;
            }
            if (d[i] != 1) out += std::to_string(d[i]) + "*";
            out += symbol_;
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

    /// Parses integers ("3", read mod p), or polynomials in the symbol such as "a^2+a+1",
    /// "2*a+1", "-a".
    Elem parse(std::string_view text) const;

    std::string name() const {
        return spec_.k == 1 ? "GF(" + std::to_string(spec_.p) + ")"
                            : "GF(" + std::to_string(spec_.p) + "^" + std::to_string(spec_.k) + ")";
    }

   private:
    Field(FieldSpec spec, std::string symbol) : spec_(std::move(spec)), symbol_(std::move(symbol)) {
        if (!detail::is_prime(spec_.p)) throw axiom_error("characteristic " + std::to_string(spec_.p) + " is not prime");
        if (spec_.k == 0) throw axiom_error("extension degree must be at least 1");
        if (spec_.modulus.empty()) spec_.modulus = default_modulus(spec_.p, spec_.k);
        if (spec_.modulus.size() != spec_.k + 1) throw axiom_error("modulus must have k+1 coefficients");
        for (auto& c : spec_.modulus) c %= spec_.p;
        if (spec_.modulus.back() != 1) throw axiom_error("modulus must be monic");
        if (!detail::is_irreducible(spec_.modulus, spec_.p)) throw axiom_error("modulus is reducible over Z_p");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < spec_.k; ++i) {
            q *= spec_.p;
            if (q > max_order) throw axiom_error("field order exceeds supported range");
        }
        q_ = static_cast<std::uint32_t>(q);
        build_tables();
    }

    Elem encode(const detail::ZpPoly& poly) const {
        Elem c = 0;
        for (std::size_t i = poly.size(); i-- > 0;) c = c * spec_.p + poly[i];
        return c;
    }
    detail::ZpPoly decode(Elem x) const {
        detail::ZpPoly d = coeffs(x);
        detail::trim(d);
        return d;
    }
    Elem slow_mul(Elem a, Elem b) const {
        return encode(detail::zp_mod(detail::zp_mul(decode(a), decode(b), spec_.p), spec_.modulus, spec_.p));
    }
    Elem digitwise(Elem a, Elem b, bool negate_b) const noexcept {
        Elem r = 0, scale = 1;
        const std::uint32_t p = spec_.p;
        for (std::uint32_t i = 0; i < spec_.k; ++i) {
            const std::uint32_t x = a % p, y = b % p;
            const std::uint32_t d = negate_b ? (x + p - y) % p : (x + y) % p;
            r += d * scale;
            scale *= p;
            a /= p;
            b /= p;
        }
        return r;
    }
    Elem euclid_inverse(Elem a) const {
        // extended Euclid on (modulus, a): track s with s*a = r (mod modulus)
        detail::ZpPoly r0 = spec_.modulus, r1 = decode(a);
        detail::ZpPoly s0{}, s1{1};
        const std::uint32_t p = spec_.p;
        while (!r1.empty()) {
            auto [quot, rem] = detail::zp_divmod(r0, r1, p);
            detail::ZpPoly s2 = detail::zp_sub(s0, detail::zp_mul(quot, s1, p), p);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 is a nonzero constant
        const std::uint32_t c = detail::inv_mod_p(r0[0], p);
        for (auto& d : s0) d = static_cast<std::uint32_t>(static_cast<std::uint64_t>(d) * c % p);
        return encode(detail::zp_mod(s0, spec_.modulus, p));
    }
    void build_tables() {
        const std::uint32_t n = q_ - 1;
        log_.assign(q_, 0);
        exp_.assign(n == 0 ? 1 : n, 1);
        // find a primitive element
        for (Elem g = 1; g < q_; ++g) {
            Elem x = 1;
            std::uint32_t ord = 0;
            do {
                x = slow_mul(x, g);
                ++ord;
            } while (x != 1 && ord <= n);
            if (ord != n) continue;
            x = 1;
            for (std::uint32_t e = 0; e < n; ++e) {
                exp_[e] = x;
                log_[x] = e;
                x = slow_mul(x, g);
            }
            break;
        }
        if (spec_.p != 2) {
            neg_table_.resize(q_);
            for (Elem a = 0; a < q_; ++a) neg_table_[a] = digitwise(0, a, true);
            if (q_ <= 256) {
                add_table_.resize(static_cast<std::size_t>(q_) * q_);
                for (Elem a = 0; a < q_; ++a)
                    for (Elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = digitwise(a, b, false);
            }
        }
        inv_.assign(q_, 0);
        for (Elem a = 1; a < q_; ++a) inv_[a] = euclid_inverse(a);
    }

    FieldSpec spec_;
    std::string symbol_;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;
    std::vector<Elem> inv_;
    std::vector<Elem> neg_table_;
    std::vector<Elem> add_table_;
};

inline Elem Field::parse(std::string_view text) const {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s.push_back(ch);
    if (s.empty()) throw parse_error("empty field element");
    std::size_t pos = 0;
    Elem acc = 0;
    bool first = true;
    auto read_int = [&](std::int64_t& out) {
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) return false;
        out = std::stoll(s.substr(start, pos - start));
        return true;
    };
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            throw parse_error("expected '+' or '-' in field element '" + s + "'");
        }
        first = false;
        Elem term = 1;
        std::int64_t coef = 1;
        bool have_coef = read_int(coef);
        if (have_coef) {
            term = from_int(coef);
            if (pos < s.size() && s[pos] == '*') ++pos;
            else {
                acc = negative ? sub(acc, term) : add(acc, term);
                continue;
            }
        }
        if (s.compare(pos, symbol_.size(), symbol_) != 0)
            throw parse_error("unexpected token in field element '" + s + "'");
        pos += symbol_.size();
        std::int64_t e = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            if (!read_int(e)) throw parse_error("bad exponent in field element '" + s + "'");
        }
        term = mul(term, pow(generator(), e));
        acc = negative ? sub(acc, term) : add(acc, term);
    }
    return acc;
}

/// A field element that carries its field; arithmetic across different fields throws.
class FieldElement {
   public:
    FieldElement(std::shared_ptr<const Field> f, Elem v) : f_(std::move(f)), v_(v) {
        if (!f_->contains(v_)) throw dimension_error("code out of range for " + f_->name());
    }
    static FieldElement zero(std::shared_ptr<const Field> f) { return {std::move(f), 0}; }
    static FieldElement one(std::shared_ptr<const Field> f) { return {std::move(f), 1}; }

    const std::shared_ptr<const Field>& field() const noexcept { return f_; }
    Elem code() const noexcept { return v_; }
    std::vector<std::uint32_t> coeffs() const { return f_->coeffs(v_); }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElement inv() const { return {f_, f_->inv(v_)}; }
    FieldElement pow(std::int64_t e) const { return {f_, f_->pow(v_, e)}; }

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
        check(x, y);
        return {x.f_, x.f_->add(x.v_, y.v_)};
    }
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
        check(x, y);
        return {x.f_, x.f_->sub(x.v_, y.v_)};
    }
    friend FieldElement operator-(const FieldElement& x) { return {x.f_, x.f_->neg(x.v_)}; }
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
        check(x, y);
        return {x.f_, x.f_->mul(x.v_, y.v_)};
    }
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y) {
        check(x, y);
        return {x.f_, x.f_->div(x.v_, y.v_)};
    }
    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        return x.f_->same_as(*y.f_) && x.v_ == y.v_;
    }
    friend std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.f_->to_string(x.v_); }

   private:
    static void check(const FieldElement& x, const FieldElement& y) {
        if (!x.f_->same_as(*y.f_))
            throw mismatch_error("mixed-field operands: " + x.f_->name() + " and " + y.f_->name());
    }

    std::shared_ptr<const Field> f_;
    Elem v_;
};

}  // namespace skl

#endif
