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

// skl: command-line front end. Exit status 0 = all checks passed, 1 = a mathematical
// check failed, 2 = bad input (syntax, schema, or a ring that does not exist).

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "skl/skl.hpp"
#include "skl/workspace.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string existence_line(const skl::RingExistence& e) {
    std::string s = "poly: yes, series: ";
    s += e.series ? "yes (m=" + std::to_string(*e.m_delta) + ")" : "no (" + e.series_witness + ")";
    s += ", laurent: ";
    s += e.laurent ? "yes (m'=" + std::to_string(*e.m_delta_prime) + ")" : "no (" + e.laurent_witness + ")";
    return s;
}

int cmd_verify(const std::string& file) {
    const auto ws = skl::load_workspace(file);
    const auto& A = *ws.algebra;
    std::cout << "field: " << ws.field->name() << "\n";
    std::cout << "algebra: dim " << A.dim() << " over " << A.field().name() << "\n";
    const auto arep = skl::verify_algebra(A);
    std::cout << "algebra axioms: " << (arep.valid ? "valid" : "INVALID") << "\n";
    for (const auto& f : arep.failures) std::cout << "  " << f << "\n";
    if (!arep.valid) return kFail;
    const auto drep = skl::check_skew_derivation(A, ws.sigma, ws.delta);
    std::cout << "sigma-derivation axioms: " << (drep.ok ? "valid" : "INVALID") << "\n";
    for (const auto& f : drep.failures) std::cout << "  " << f << "\n";
    if (!drep.ok) return kFail;
    const auto d = skl::SkewDerivation::make(ws.algebra, ws.sigma, ws.delta);
    std::cout << "sigma invertible: " << yes_no(d->sigma_invertible()) << "\n";
    std::cout << "m_delta: " << (d->m_delta() ? std::to_string(*d->m_delta()) : "none (not nilpotent)") << "\n";
    if (d->sigma_invertible())
        std::cout << "m_delta': " << (d->m_delta_prime() ? std::to_string(*d->m_delta_prime()) : "none (not nilpotent)") << "\n";
    std::cout << existence_line(skl::laurent_ring_exists(*d)) << "\n";
    if (ws.module) {
        const auto mrep = skl::module_verify(*ws.module);
        std::cout << "module F^" << ws.module->n() << ": " << (mrep.valid ? "valid" : "INVALID") << "\n";
        for (const auto& f : mrep.failures) std::cout << "  " << f << "\n";
        if (!mrep.valid) return kFail;
    }
    return kPass;
}

std::shared_ptr<const skl::SkewDerivation> derivation_of(const skl::Workspace& ws) {
    return skl::SkewDerivation::make(ws.algebra, ws.sigma, ws.delta);
}

int cmd_mul(const std::string& file, const std::string& ring, const std::string& lhs, const std::string& rhs,
            std::optional<std::size_t> prec) {
    const auto ws = skl::load_workspace(file);
    const skl::SkewContext ctx(derivation_of(ws));
    const auto& A = ctx.algebra();
    const std::size_t N = prec.value_or(ws.precision);
    if (ring == "poly") {
        std::cout << skl::to_string(A, skl::poly_mul(ctx, skl::parse_skew_poly(A, lhs), skl::parse_skew_poly(A, rhs)))
                  << "\n";
        return kPass;
    }
    if (ring == "series") {
        const std::size_t m = ctx.m_delta();
        const auto s = skl::to_series(ctx, skl::parse_skew_poly(A, lhs), N * m);
        const auto t = skl::to_series(ctx, skl::parse_skew_poly(A, rhs), N);
        std::cout << skl::to_string(A, skl::series_mul(ctx, s, t, N)) << "\n";
        return kPass;
    }
    if (ring == "laurent") {
        ctx.require_laurent();
        const std::size_t m = ctx.m_delta();
        auto [so, sc] = skl::parse_laurent_terms(A, lhs);
        auto [to, tc] = skl::parse_laurent_terms(A, rhs);
        sc.resize(std::max(sc.size(), N * m), A.zero());
        tc.resize(std::max(tc.size(), N), A.zero());
        sc.resize(N * m);
        tc.resize(N);
        const skl::TruncLaurent s(so, sc), t(to, tc);
        std::cout << skl::to_string(A, skl::laurent_mul(ctx, s, t)) << "\n";
        return kPass;
    }
    throw skl::parse_error("unknown ring '" + ring + "' (expected poly, series or laurent)");
}

int cmd_nop(const std::string& file, std::size_t i, std::size_t n) {
    const auto ws = skl::load_workspace(file);
    const skl::SkewContext ctx(derivation_of(ws));
    const auto& A = ctx.algebra();
    const auto& N = ctx.N(i, n);
    for (std::size_t j = 0; j < A.dim(); ++j)
        std::cout << "N_" << i << "^" << n << "(" << A.labels()[j] << ") = " << A.to_string(skl::apply(A.field(), N, A.basis(j)))
                  << "\n";
    return kPass;
}

int cmd_ore(const std::string& file, const std::string& fexpr, std::size_t k) {
    const auto ws = skl::load_workspace(file);
    const skl::SkewContext ctx(derivation_of(ws));
    const auto& A = ctx.algebra();
    const auto f = skl::parse_skew_poly(A, fexpr);
    const auto w = skl::ore_left_power(ctx, f, k);
    const auto lhs = skl::xn_times(ctx, f, w.n);
    const auto rhs = skl::poly_mul(ctx, w.g, skl::x_power(ctx, w.k));
    const bool ok = lhs == rhs;
    auto xp = [](std::size_t e) { return e == 0 ? std::string("1") : skl::x_power_string(static_cast<std::int64_t>(e)); };
    std::cout << xp(w.n) << " * (" << skl::to_string(A, f) << ") = (" << skl::to_string(A, w.g) << ") * " << xp(w.k)
              << "\n";
    std::cout << "check: " << (ok ? "ok" : "FAILED") << "\n";
    return ok ? kPass : kFail;
}

void print_basis(const skl::Field& F, const skl::PolyMatrix& G) {
    std::cout << "basis (" << G.rows() << " x " << G.cols() << "):\n";
    for (std::size_t i = 0; i < G.rows(); ++i) std::cout << "  " << skl::row_string(F, G.row(i)) << "\n";
}

int cmd_code(const std::string& action, const std::string& file) {
    const auto ws = skl::load_workspace(file);
    const skl::SkewContext ctx(derivation_of(ws));
    ctx.require_laurent();
    if (!ws.module) throw skl::parse_error(file + ": /module is required for code commands");
    if (!ws.generators) throw skl::parse_error(file + ": /code/generators is required");
    const auto mrep = skl::module_verify(*ws.module);
    if (!mrep.valid) throw skl::parse_error(file + ": module action is not a right module: " + mrep.failures.front());
    const skl::Field& F = ctx.field();
    const auto& M = *ws.module;
    nlohmann::ordered_json summary;
    summary["action"] = action;
    bool pass = false;
    if (action == "check") {
        const auto G = skl::row_module_basis(F, *ws.generators);
        const bool pure = skl::is_direct_summand(F, G);
        const bool stable = skl::is_cyclic_submodule(ctx, M, G);
        print_basis(F, G);
        std::cout << "pure (direct summand): " << yes_no(pure) << "\n";
        std::cout << "stable under A: " << yes_no(stable) << "\n";
        pass = pure && stable;
        summary["k"] = G.rows();
        summary["n"] = G.cols();
        summary["pure"] = pure;
        summary["stable"] = stable;
    } else if (action == "closure") {
        const auto res = skl::cyclic_closure(ctx, M, *ws.generators);
        print_basis(F, res.code.G);
        std::cout << "rank by round:";
        for (auto r : res.rank_trace) std::cout << " " << r;
        std::cout << "\n";
        std::cout << "pure (direct summand): " << yes_no(res.code.pure) << "\n";
        std::cout << "stable under A: " << yes_no(res.code.stable) << "\n";
        std::cout << "rate: " << res.code.k() << "/" << res.code.n() << "\n";
        pass = res.code.pure && res.code.stable;
        summary["k"] = res.code.k();
        summary["n"] = res.code.n();
        summary["pure"] = res.code.pure;
        summary["stable"] = res.code.stable;
        summary["rank_trace"] = res.rank_trace;
    } else if (action == "roundtrip") {
        const auto G = skl::row_module_basis(F, *ws.generators);
        skl::ConvCodeBasis C{G, false, false};
        const auto r = skl::correspondence_roundtrip(ctx, M, C);
        print_basis(F, G);
        std::cout << "pure (direct summand): " << yes_no(r.pure) << "\n";
        std::cout << "stable under A: " << yes_no(r.stable) << "\n";
        std::cout << "closure(C) = C: " << yes_no(r.closure_fixed) << "\n";
        std::cout << "rank over F[X] = " << r.rank_fx << ", dimension over F((X)) = " << r.rank_fraction_field << "\n";
        pass = r.passed();
        summary["k"] = G.rows();
        summary["n"] = G.cols();
        summary["pure"] = r.pure;
        summary["stable"] = r.stable;
        summary["closure_fixed"] = r.closure_fixed;
        summary["rank_matches"] = r.rank_matches;
    } else if (action == "encode") {
        if (!ws.message) throw skl::parse_error(file + ": /code/message is required for encode");
        const auto C = skl::code_from_matrix(ctx, M, *ws.generators);
        print_basis(F, C.G);
        if (!C.pure) throw skl::axiom_error("encoding needs a pure code");
        const auto word = skl::encode(F, *ws.message, C);
        std::cout << "message: " << skl::row_string(F, *ws.message) << "\n";
        std::cout << "codeword: " << skl::row_string(F, skl::vecpoly_to_row(word, C.n())) << "\n";
        const auto back = skl::membership(F, skl::vecpoly_to_row(word, C.n()), C.G);
        const bool ok = back && *back == *ws.message;
        std::cout << "decoded by membership: " << (ok ? "ok" : "FAILED") << "\n";
        pass = ok;
        summary["k"] = C.k();
        summary["n"] = C.n();
        summary["decoded"] = ok;
    } else {
        throw skl::parse_error("unknown code action '" + action + "'");
    }
    summary["pass"] = pass;
    std::cout << "--- summary\n" << summary.dump() << "\n";
    return pass ? kPass : kFail;
}

int cmd_example(const std::string& name) {
    const auto checks = skl::worked::run(name);
    bool all = true;
    for (const auto& c : checks) {
        std::cout << (c.ok ? "ok    " : "FAIL  ") << c.what << "\n";
        all = all && c.ok;
    }
    std::cout << name << ": " << (all ? "all identities hold" : "some identities FAILED") << "\n";
    return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skl: skew polynomial, power series and Laurent series rings over finite-dimensional algebras"};
    app.require_subcommand(1);

    std::string file, ring = "poly", lhs, rhs, fexpr, action, name;
    std::optional<std::size_t> prec;
    std::size_t nop_i = 0, nop_n = 0, ore_k = 1;

    auto* verify = app.add_subcommand("verify", "check axioms and report which rings exist");
    verify->add_option("file", file, "workspace JSON file")->required();

    auto* mul = app.add_subcommand("mul", "multiply two elements");
    mul->add_option("file", file, "workspace JSON file")->required();
    mul->add_option("--ring", ring, "poly, series or laurent")->check(CLI::IsMember({"poly", "series", "laurent"}));
    mul->add_option("--lhs", lhs, "left factor, e.g. \"E21*X + 1\"")->required();
    mul->add_option("--rhs", rhs, "right factor")->required();
    mul->add_option("--prec", prec, "output precision (series, Laurent)");

    auto* nop = app.add_subcommand("nop", "print N_i^n on the basis");
    nop->add_option("file", file, "workspace JSON file")->required();
    nop->add_option("-i", nop_i, "index i")->required();
    nop->add_option("-n", nop_n, "index n")->required();

    auto* ore = app.add_subcommand("ore", "left Ore witness X^n f = g X^k");
    ore->add_option("file", file, "workspace JSON file")->required();
    ore->add_option("--f", fexpr, "the polynomial f")->required();
    ore->add_option("--k", ore_k, "power of X on the right (default 1)");

    auto* code = app.add_subcommand("code", "cyclic convolutional codes");
    code->add_option("action", action, "check, closure, roundtrip or encode")
        ->required()
        ->check(CLI::IsMember({"check", "closure", "roundtrip", "encode"}));
    code->add_option("file", file, "workspace JSON file with module and code payload")->required();

    auto* example = app.add_subcommand("example", "rerun a worked example");
    example->add_option("name", name, "m2f4-inner, f4c5-group, m2f4-diag or fyz-quotient")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (*verify) return cmd_verify(file);
        if (*mul) return cmd_mul(file, ring, lhs, rhs, prec);
        if (*nop) return cmd_nop(file, nop_i, nop_n);
        if (*ore) return cmd_ore(file, fexpr, ore_k);
        if (*code) return cmd_code(action, file);
        if (*example) return cmd_example(name);
    } catch (const skl::axiom_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return kInput;
}
