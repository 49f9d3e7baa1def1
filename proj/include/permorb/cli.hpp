#pragma once

// Command-line front end. run() is the whole program minus process setup so
// tests can drive it with argument vectors and string streams.

#include "permorb/io.hpp"
#include "permorb/modular_data.hpp"
#include "permorb/orbifold.hpp"
#include "permorb/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace permorb::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kInputError = 2, kBudgetExceeded = 3 };

struct RunConfig {
    std::string input_path;
    std::string builtin_name;
    std::string c;
    int n = 0;
    int k = 1;
    bool k_given = false;
    unsigned precision = kDefaultPrecision;
    std::string tol = "1e-30";
    Engine engine = Engine::theorem;
    std::string output;
    std::string format = "human";
};

namespace detail {

inline std::string sci(double v) {
    if (std::isinf(v)) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

inline Json deviation_json(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline ModularData resolve_input(const RunConfig& cfg, std::ostream& err) {
    const bool has_file = !cfg.input_path.empty(), has_builtin = !cfg.builtin_name.empty();
    if (has_file == has_builtin) throw InputError("give exactly one of an input file or --builtin NAME");
    if (has_file) {
        if (!cfg.c.empty() || cfg.n != 0) throw InputError("--c and --n only apply to builtins");
        std::vector<std::string> warnings;
        auto md = load(cfg.input_path, &warnings);
        for (const auto& w : warnings) err << "warning: " << w << "\n";
        check_shape(md);
        return md;
    }
    BuiltinParams params;
    if (!cfg.c.empty()) {
        if (cfg.builtin_name != "holomorphic") throw InputError("--c only applies to the holomorphic builtin");
        params.c = parse_rational(cfg.c);
    }
    if (cfg.n != 0) {
        if (cfg.builtin_name != "z_n") throw InputError("--n only applies to the z_n builtin");
        params.n = cfg.n;
    }
    return builtin(cfg.builtin_name, params);
}

inline void print_checks(std::ostream& out, const std::vector<CheckResult>& checks, const std::string& tol) {
    out << "checks (tol " << tol << "):\n";
    for (const auto& c : checks)
        out << "  " << std::left << std::setw(24) << c.name << (c.pass ? "pass" : "FAIL") << "  dev " << std::setw(9)
            << sci(c.deviation) << "  " << std::fixed << std::setprecision(1) << c.elapsed_ms << " ms\n"
            << std::defaultfloat;
}

inline Json checks_json(const std::vector<CheckResult>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"deviation", deviation_json(c.deviation)}, {"elapsed_ms", c.elapsed_ms}});
    return arr;
}

inline Json cycle_table_json(int k) {
    Json arr = Json::array();
    for (int s = 0; s < k; ++s)
        for (int r = 0; r < k; ++r) {
            const auto c = cycle_constants(s, r, k);
            arr.push_back({{"s", s}, {"r", r}, {"d", c.d}, {"l", c.l}, {"m", c.m}, {"d1", c.d1}, {"l1", c.l1},
                           {"f", c.f}, {"b", c.b}, {"a", c.a}, {"x", c.x}, {"y", c.y}, {"p", c.p}, {"q", c.q}});
        }
    return arr;
}

inline void print_cycle_table(std::ostream& out, int k) {
    out << "cycle constants:\n";
    const char* cols[] = {"s", "r", "d", "l", "m", "d1", "l1", "f", "b", "a", "x", "y", "p", "q"};
    out << " ";
    for (const char* c : cols) out << std::right << std::setw(4) << c;
    out << "\n";
    for (const auto& row : cycle_table_json(k)) {
        out << " ";
        for (const char* c : cols) out << std::setw(4) << row[c].get<std::int64_t>();
        out << "\n";
    }
    out << std::left;
}

inline std::string input_summary(const ModularData& md) {
    return md.name + " (rank " + std::to_string(md.rank()) + ", c = " + to_string(md.central_charge) + ")";
}

inline std::vector<CheckResult> as_results(const ValidationReport& r) {
    std::vector<CheckResult> out;
    for (const auto& c : r.checks) out.push_back({c.name, c.pass, c.deviation, 0});
    return out;
}

inline int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto md = resolve_input(cfg, err);
    const auto report = validate(md, real_from_string(cfg.tol));
    if (cfg.format == "machine") {
        out << Json{{"command", "validate"}, {"input", md.name}, {"rank", md.rank()},
                    {"central_charge", to_string(md.central_charge)}, {"tol", cfg.tol},
                    {"checks", checks_json(as_results(report))}, {"pass", report.all_pass()}}
                   .dump(2)
            << "\n";
    } else {
        out << "input: " << input_summary(md) << "\n";
        print_checks(out, as_results(report), cfg.tol);
        out << "result: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
    }
    return report.all_pass() ? kOk : kVerificationFailure;
}

inline int cmd_builtins(const RunConfig& cfg, std::ostream& out) {
    const std::vector<std::pair<std::string, std::string>> rows = {
        {"holomorphic", "rank 1, S = [1]; --c P/Q (default 8; valid iff c = 0 mod 8)"},
        {"ising", "rank 3, c = 1/2"},
        {"fibonacci", "rank 2, c = 14/5"},
        {"z_n", "rank N pointed theory; --n N (default 2)"},
    };
    if (cfg.format == "machine") {
        Json arr = Json::array();
        for (const auto& [name, desc] : rows) arr.push_back({{"name", name}, {"description", desc}});
        out << arr.dump(2) << "\n";
    } else {
        for (const auto& [name, desc] : rows) out << std::left << std::setw(13) << name << desc << "\n";
    }
    return kOk;
}

inline int cmd_catalog(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto md = resolve_input(cfg, err);
    const auto mods = catalog(md, cfg.k);
    if (cfg.format == "machine") {
        Json arr = Json::array();
        for (const auto& m : mods) arr.push_back(module_to_json(m, cfg.k));
        out << Json{{"input", md.name}, {"k", cfg.k}, {"count", mods.size()}, {"modules", arr}}.dump(2) << "\n";
        return kOk;
    }
    out << "input: " << input_summary(md) << "\nk: " << cfg.k << "\ncatalog: " << mods.size() << " modules\n";
    out << std::left << std::setw(6) << "#" << std::setw(8) << "family" << std::setw(8) << "sector" << std::setw(16)
        << "tuple" << std::setw(7) << "eigen" << std::setw(10) << "weight" << "label\n";
    for (std::size_t i = 0; i < mods.size(); ++i) {
        const auto& m = mods[i];
        std::string tuple;
        for (int v : m.tensor_label(cfg.k).tuple) tuple += (tuple.empty() ? "" : ",") + std::to_string(v);
        out << std::setw(6) << i << std::setw(8) << m.family() << std::setw(8) << m.sector() << std::setw(16)
            << "(" + tuple + ")" << std::setw(7) << m.eigen() << std::setw(10) << to_string(m.weight) << m.label << "\n";
    }
    return kOk;
}

/// Shared by orbifold and verify -k: compute, check, report.
inline int run_orbifold(const RunConfig& cfg, Engine engine, bool write_output, const char* command, std::ostream& out,
                        std::ostream& err) {
    const auto md = resolve_input(cfg, err);
    const Real tol = real_from_string(cfg.tol);
    const auto input_report = validate(md, tol);
    if (!input_report.all_pass())
        for (const auto& c : input_report.checks)
            if (!c.pass) err << "warning: input check '" << c.name << "' fails (dev " << sci(c.deviation) << ")\n";

    const OrbifoldOptions opt;
    const auto res = orbifold_s_matrix(md, cfg.k, engine, opt);
    const auto suite = axiom_suite(res, tol);
    const auto counts = count_oracle(md, cfg.k, opt);
    const bool diff_ok = !res.engine_diff || *res.engine_diff <= tol;
    const bool pass = suite.all_pass() && counts.agree() && diff_ok;
    const std::string name = md.name + " orbifold k=" + std::to_string(cfg.k);
    if (write_output && !cfg.output.empty()) store(res, name, cfg.output);

    if (cfg.format == "machine") {
        Json j{{"command", command},
               {"input", md.name},
               {"k", cfg.k},
               {"engine", to_string(engine)},
               {"precision", working_precision()},
               {"tol", cfg.tol},
               {"cycle_constants", cycle_table_json(cfg.k)},
               {"catalog_size", counts.catalog_count},
               {"burnside_count", counts.burnside_count},
               {"vacuum_index", res.vacuum},
               {"central_charge", to_string(res.central_charge)},
               {"input_valid", input_report.all_pass()},
               {"checks", checks_json(suite.checks)}};
        if (res.engine_diff) j["engine_diff"] = res.engine_diff->convert_to<double>();
        if (write_output && !cfg.output.empty()) j["output"] = cfg.output;
        j["pass"] = pass;
        out << j.dump(2) << "\n";
    } else {
        out << "input: " << input_summary(md) << "\n"
            << "k: " << cfg.k << "\nengine: " << to_string(engine) << "\nprecision: " << working_precision()
            << " digits\n";
        print_cycle_table(out, cfg.k);
        out << "catalog: " << counts.catalog_count << " modules (independent count " << counts.burnside_count
            << (counts.agree() ? ", agrees" : ", MISMATCH") << ")\n"
            << "vacuum index: " << res.vacuum << "\ncentral charge: " << to_string(res.central_charge) << "\n";
        if (res.engine_diff)
            out << "engine diff: " << sci(res.engine_diff->convert_to<double>()) << (diff_ok ? "" : "  FLAGGED") << "\n";
        print_checks(out, suite.checks, cfg.tol);
        if (write_output && !cfg.output.empty()) out << "wrote " << cfg.output << "\n";
        out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kOk : kVerificationFailure;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.k_given) return run_orbifold(cfg, Engine::both, false, "verify", out, err);
    const auto md = resolve_input(cfg, err);
    const auto suite = axiom_suite(md, real_from_string(cfg.tol));
    if (cfg.format == "machine") {
        out << Json{{"command", "verify"}, {"input", md.name}, {"tol", cfg.tol}, {"checks", checks_json(suite.checks)},
                    {"pass", suite.all_pass()}}
                   .dump(2)
            << "\n";
    } else {
        out << "input: " << input_summary(md) << "\n";
        print_checks(out, suite.checks, cfg.tol);
        out << "result: " << (suite.all_pass() ? "PASS" : "FAIL") << "\n";
    }
    return suite.all_pass() ? kOk : kVerificationFailure;
}

}  // namespace detail

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Modular data of cyclic permutation orbifolds", "permorb"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string engine = "theorem";

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input_path, "Modular data file (JSON)");
        sub->add_option("--builtin", cfg.builtin_name, "Builtin theory: holomorphic, ising, fibonacci, z_n");
        sub->add_option("--c", cfg.c, "Central charge P/Q for holomorphic");
        sub->add_option("--n", cfg.n, "N for z_n")->check(CLI::Range(2, 1 << 20));
        sub->add_option("--precision", cfg.precision, "Working precision in decimal digits (>= 50)");
        sub->add_option("--tol", cfg.tol, "Comparison tolerance");
        sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"human", "machine"}));
    };
    auto add_k = [&](CLI::App* sub) {
        sub->add_option("-k", cfg.k, "Number of tensor factors")->check(CLI::PositiveNumber);
    };

    auto* validate_cmd = app.add_subcommand("validate", "Check the axioms of input modular data");
    add_input(validate_cmd);
    auto* builtins_cmd = app.add_subcommand("builtins", "List builtin theories");
    builtins_cmd->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"human", "machine"}));
    auto* orbifold_cmd = app.add_subcommand("orbifold", "Compute the orbifold S-matrix, T-phases and catalog");
    add_input(orbifold_cmd);
    add_k(orbifold_cmd);
    orbifold_cmd->add_option("--engine", engine, "theorem, generic or both")
        ->check(CLI::IsMember({"theorem", "generic", "both"}));
    orbifold_cmd->add_option("-o", cfg.output, "Output data file");
    auto* catalog_cmd = app.add_subcommand("catalog", "List irreducible orbifold modules");
    add_input(catalog_cmd);
    add_k(catalog_cmd);
    auto* verify_cmd = app.add_subcommand("verify", "Run the axiom suite; with -k, also the orbifold cross-checks");
    add_input(verify_cmd);
    add_k(verify_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        WorkingPrecision guard(cfg.precision);
        if (!(real_from_string(cfg.tol) > 0)) throw InputError("tolerance must be positive");
        cfg.engine = parse_engine(engine);
        for (auto* sub : {orbifold_cmd, catalog_cmd, verify_cmd})
            if (sub->parsed() && sub->count("-k") > 0) cfg.k_given = true;
        if (validate_cmd->parsed()) return detail::cmd_validate(cfg, out, err);
        if (builtins_cmd->parsed()) return detail::cmd_builtins(cfg, out);
        if (orbifold_cmd->parsed()) return detail::run_orbifold(cfg, cfg.engine, true, "orbifold", out, err);
        if (catalog_cmd->parsed()) return detail::cmd_catalog(cfg, out, err);
        if (verify_cmd->parsed()) return detail::cmd_verify(cfg, out, err);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace permorb::cli
