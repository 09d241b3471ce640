// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Exit codes: 0 true/success, 1 false/mismatch,
// 2 usage, parse or engine error (diagnostic on stderr).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gcs/bisim.hpp"
#include "gcs/error.hpp"
#include "gcs/frontend.hpp"
#include "gcs/logic.hpp"
#include "gcs/oracle.hpp"
#include "gcs/reductions.hpp"

namespace {

using namespace gcs;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// `@path` reads the argument from a file.
std::string arg_text(const std::string& arg) { return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg; }

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
    out << text;
}

struct Globals {
    bool metrics = false;
    std::size_t pool_cap = PreStarOptions{}.pool_cap;
};

void emit_metrics(const Globals& o, const Metrics& m) {
    if (o.metrics) std::cout << metrics_to_json(m) << "\n";
}

int run_check(const Globals& o, const std::string& gcs_path, const std::string& val, const std::string& formula) {
    const auto g = parse_gcs(read_file(gcs_path));
    const auto f = parse_formula(arg_text(formula), g);
    require_ef(f);
    const auto v = parse_valuation(arg_text(val), g);
    Evaluator ev(g, o.pool_cap);
    const bool verdict = contains(ev.denote(f), v);
    std::cout << (verdict ? "true" : "false") << "\n";
    emit_metrics(o, ev.metrics());
    return verdict ? 0 : 1;
}

int run_denote(const Globals& o, const std::string& gcs_path, const std::string& formula, bool as_json) {
    const auto g = parse_gcs(read_file(gcs_path));
    const auto f = parse_formula(arg_text(formula), g);
    Evaluator ev(g, o.pool_cap);
    const auto s = ev.denote(f);
    std::cout << (as_json ? set_to_json(s) + "\n" : set_to_text(s));
    emit_metrics(o, ev.metrics());
    return 0;
}

int run_prestar(const Globals& o, const std::string& gcs_path, const std::string& set_path,
                const std::vector<std::string>& actions, const std::string& guard, bool as_json) {
    const auto g = parse_gcs(read_file(gcs_path));
    const auto s = parse_set(read_file(set_path), g);
    Metrics m;
    PreStarOptions opts;
    opts.pool_cap = o.pool_cap;
    opts.metrics = &m;
    if (!actions.empty()) opts.actions = actions;
    if (!guard.empty()) opts.guard = parse_constraint(arg_text(guard));
    const auto r = pre_star(g, s, opts);
    std::cout << (as_json ? set_to_json(r) + "\n" : set_to_text(r));
    emit_metrics(o, m);
    return 0;
}

int run_bisim(const Globals& o, const std::string& gcs_path, const std::string& val, const std::string& lts_path,
              const std::string& state, const std::string& mode, const std::string& tau) {
    const auto g = parse_gcs(read_file(gcs_path));
    const auto v = parse_valuation(arg_text(val), g);
    const auto l = parse_lts(read_file(lts_path));
    const auto s = l.state_index(state);
    if (!s) throw InvalidInput("unknown LTS state '" + state + "'");
    EquivalenceChecker checker(g, l, mode == "weak" ? BisimMode::Weak : BisimMode::Strong, tau, o.pool_cap);
    const bool verdict = checker.check(v, *s);
    std::cout << (verdict ? "true" : "false") << "\n";
    emit_metrics(o, checker.metrics());
    return verdict ? 0 : 1;
}

int run_gen_qbf(const Globals& o, const std::string& qbf, const std::string& out_dir) {
    const auto q = parse_qbf(arg_text(qbf));
    const auto inst = qbf_to_gcs(q);
    for (const auto& d : inst.diagnostics) std::cerr << "gcsmc: " << d << "\n";
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "system.gcs", serialize_gcs(inst.gcs));
    write_file(dir / "initial.val", serialize_valuation(inst.initial, inst.gcs) + "\n");
    write_file(dir / "target.ef", to_string(*inst.target) + "\n");
    std::cout << (dir / "system.gcs").string() << "\n"
              << (dir / "initial.val").string() << "\n"
              << (dir / "target.ef").string() << "\n";
    emit_metrics(o, Metrics{});
    return 0;
}

int run_oracle_diff(const Globals& o, std::uint64_t seed, std::size_t cases) {
    const auto r = differential_run(seed, cases);
    std::cout << report_to_json(r) << "\n";
    emit_metrics(o, r.metrics);
    return r.mismatches.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic EF model checker for gap-order constraint systems"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals globals;
    app.add_flag("--metrics", globals.metrics, "Print pre* metrics as JSON after the result");
    app.add_option("--pool-cap", globals.pool_cap, "Largest pre* pool before a resource-limit error")
        ->check(CLI::PositiveNumber);

    std::string gcs_path, val, formula, set_path, guard, lts_path, state, mode = "strong", tau = "tau", qbf, out_dir;
    std::vector<std::string> actions;
    bool as_json = false;
    std::uint64_t seed = 1;
    std::size_t cases = 100;
    int code = 0;

    auto* check = app.add_subcommand("check", "Decide v |= formula; prints true/false");
    check->add_option("gcs", gcs_path, "System file")->required();
    check->add_option("valuation", val, "Valuation, e.g. \"x=3, y=0\" (or @file)")->required();
    check->add_option("formula", formula, "EF formula (or @file)")->required();

    auto* den = app.add_subcommand("denote", "Print the denotation as a union of graphs");
    den->add_option("gcs", gcs_path, "System file")->required();
    den->add_option("formula", formula, "EF formula (or @file)")->required();
    den->add_flag("--json", as_json, "Emit JSON");

    auto* pre = app.add_subcommand("prestar", "Print Pre* of a set");
    pre->add_option("gcs", gcs_path, "System file")->required();
    pre->add_option("set", set_path, "Set file: JSON graphs or one clause conjunction per line")->required();
    pre->add_option("--actions", actions, "Restrict to these actions")->delimiter(',');
    pre->add_option("--guard", guard, "Positive transitional clauses required on every step");
    pre->add_flag("--json", as_json, "Emit JSON");

    auto* bis = app.add_subcommand("bisim", "Decide (weak) bisimilarity of a system state and an LTS state");
    bis->add_option("gcs", gcs_path, "System file")->required();
    bis->add_option("valuation", val, "Valuation (or @file)")->required();
    bis->add_option("lts", lts_path, "LTS file")->required();
    bis->add_option("state", state, "LTS state name")->required();
    bis->add_option("--mode", mode, "strong or weak")->check(CLI::IsMember({"strong", "weak"}));
    bis->add_option("--tau", tau, "Silent action name");

    auto* gen = app.add_subcommand("gen-qbf", "Write the reachability instance of a QBF");
    gen->add_option("qbf", qbf, "QBF, e.g. 'A x. E y. (x <-> y)' (or @file)")->required();
    gen->add_option("--out", out_dir, "Output directory")->required();

    auto* oracle = app.add_subcommand("oracle", "Ground-truth tools");
    oracle->require_subcommand(1);
    auto* diff = oracle->add_subcommand("diff", "Symbolic vs explicit differential run; JSON report");
    diff->add_option("--seed", seed, "Seed");
    diff->add_option("--cases", cases, "Number of random cases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check) {
            code = run_check(globals, gcs_path, val, formula);
        } else if (*den) {
            code = run_denote(globals, gcs_path, formula, as_json);
        } else if (*pre) {
            code = run_prestar(globals, gcs_path, set_path, actions, guard, as_json);
        } else if (*bis) {
            code = run_bisim(globals, gcs_path, val, lts_path, state, mode, tau);
        } else if (*gen) {
            code = run_gen_qbf(globals, qbf, out_dir);
        } else if (*diff) {
            code = run_oracle_diff(globals, seed, cases);
        }
    } catch (const gcs::Error& e) {
        std::cerr << "gcsmc: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "gcsmc: " << e.what() << "\n";
        return 2;
    }
    return code;
}
