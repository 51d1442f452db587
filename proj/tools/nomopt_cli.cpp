// SPDX-License-Identifier: Apache-2.0
//
// nomopt command-line front end: single-cluster solves, clustering plan
// inspection, Monte Carlo sweeps and solver-vs-oracle cross checks.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nomopt/adaptive.hpp"
#include "nomopt/clustering.hpp"
#include "nomopt/experiments.hpp"
#include "nomopt/model.hpp"
#include "nomopt/oracle.hpp"
#include "nomopt/rng.hpp"
#include "nomopt/run_config.hpp"
#include "nomopt/scenario.hpp"
#include "nomopt/solver_noma.hpp"
#include "nomopt/solver_oma.hpp"

namespace {

using nlohmann::json;
using namespace nomopt;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

ClusterSpec spec_for_kind(SubproblemKind kind, double gamma1, double gamma2,
                          double w1, double p_max) {
    ClusterSpec spec;
    spec.gamma1 = gamma1;
    spec.gamma2 = gamma2;
    spec.w1 = w1;
    spec.p1_max_mw = p_max;
    spec.p2_max_mw = p_max;
    switch (kind) {
        case SubproblemKind::SS:
            spec.class1 = spec.class2 = UserClass::EMBB;
            break;
        case SubproblemKind::ES:
            spec.class1 = UserClass::IoT;
            spec.class2 = UserClass::EMBB;
            break;
        case SubproblemKind::SE:
            spec.class1 = UserClass::EMBB;
            spec.class2 = UserClass::IoT;
            break;
        case SubproblemKind::EE:
            spec.class1 = spec.class2 = UserClass::IoT;
            break;
    }
    return spec;
}

json result_to_json(const SolveResult& r) {
    return {{"p1_mw", r.alloc.p1_mw},
            {"p2_mw", r.alloc.p2_mw},
            {"scheme", to_string(r.alloc.scheme)},
            {"objective", r.objective},
            {"trace_length", r.trace.objectives.size()},
            {"converged", r.trace.converged}};
}

json user_to_json(const UserRecord& u) {
    return {{"id", u.id}, {"class", to_string(u.cls)}, {"gain_per_mw", u.gain}};
}

json plan_to_json(const ClusterPlan& plan) {
    json pairs = json::array();
    for (const auto& p : plan.pairs)
        pairs.push_back({{"weak", user_to_json(p.weak)},
                         {"strong", user_to_json(p.strong)},
                         {"kind", to_string(p.kind)},
                         {"policy", to_string(p.policy)}});
    json solos = json::array();
    for (const auto& u : plan.solos) {
        json entry = user_to_json(u);
        entry["scheme"] = "OMA";
        solos.push_back(entry);
    }
    return {{"pairs", pairs}, {"solos", solos}};
}

void write_file_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write to " + path);
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

struct CommonOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;

    RunConfig load() const {
        RunConfig cfg;
        if (!config_path.empty()) cfg = load_run_config(config_path);
        if (seed) cfg.seed = *seed;
        return cfg;
    }
};

int cmd_solve(const CommonOptions& common, const std::string& kind_name,
              double gamma1, double gamma2, std::optional<double> w1_opt,
              const std::string& scheme_name, bool adaptive) {
    const RunConfig cfg = common.load();
    const SubproblemKind kind = subproblem_kind_from_string(kind_name);
    const double w1 = w1_opt.value_or(cfg.w1);
    const ClusterSpec spec = spec_for_kind(kind, gamma1, gamma2, w1, cfg.p_max_mw);

    json out{{"kind", to_string(kind)},
             {"gamma1_per_mw", spec.gamma1},
             {"gamma2_per_mw", spec.gamma2},
             {"w1", spec.w1}};

    bool converged = true;
    if (!scheme_name.empty() && !adaptive) {
        const MaScheme scheme = ma_scheme_from_string(scheme_name);
        out["mode"] = to_string(scheme);
        if (scheme == MaScheme::OMA) {
            const SolveResult r = solve_oma(spec, cfg.sys, cfg.solver);
            out["result"] = result_to_json(r);
            converged = r.trace.converged;
        } else if (kind == SubproblemKind::EE) {
            // No NOMA production solver for all-IoT clusters; report the
            // coarse grid maximum used by the forced-NOMA baselines.
            const OracleResult r =
                oracle_solve(spec, MaScheme::NOMA, cfg.sys, GridSpec{200, 200});
            out["result"] = {{"p1_mw", r.p1_mw},
                             {"p2_mw", r.p2_mw},
                             {"scheme", "NOMA"},
                             {"objective", r.objective},
                             {"method", "grid"},
                             {"converged", true}};
        } else {
            const SolveResult r = solve_noma(spec, cfg.sys, cfg.solver);
            out["result"] = result_to_json(r);
            converged = r.trace.converged;
        }
    } else {
        out["mode"] = "adaptive";
        const ClusterDecision d = decide_cluster(spec, cfg.sys, cfg.solver);
        out["chosen"] = to_string(d.chosen);
        out["objective"] = d.objective;
        out["oma"] = result_to_json(d.oma_result);
        if (d.noma_result) {
            out["noma"] = result_to_json(*d.noma_result);
            converged = d.noma_result->trace.converged;
        }
        converged = converged && d.oma_result.trace.converged;
    }
    std::cout << out.dump(2) << '\n';
    if (!converged) {
        std::cerr << "error: solver did not converge\n";
        return kExitNumeric;
    }
    return kExitOk;
}

int cmd_cluster(const CommonOptions& common, const std::string& scenario_file,
                bool deterministic, const std::vector<int>& random_counts,
                const std::string& method) {
    const RunConfig cfg = common.load();
    Scenario scenario;
    if (!scenario_file.empty()) {
        std::ifstream in(scenario_file);
        if (!in) throw std::invalid_argument("cannot open " + scenario_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        scenario = scenario_from_json(buf.str());
    } else if (deterministic) {
        scenario = deterministic_scenario();
    } else if (!random_counts.empty()) {
        scenario = random_scenario(random_counts[0], random_counts[1], cfg.geom,
                                   cfg.chan, cfg.seed);
    } else {
        throw std::invalid_argument(
            "one of --scenario-file, --deterministic or --random is required");
    }

    ClusterPlan plan;
    if (method == "proposed")
        plan = build_proposed_plan(scenario.records(UserClass::IoT),
                                   scenario.records(UserClass::EMBB));
    else if (method == "random")
        plan = build_random_plan(scenario.records(), cfg.seed);
    else if (method == "strongest-weakest")
        plan = build_strongest_weakest_plan(scenario.records());
    else
        throw std::invalid_argument("unknown clustering method: " + method);

    json out = plan_to_json(plan);
    out["method"] = method;
    out["scenario"] = json::parse(scenario_to_json(scenario));
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_sweep(const CommonOptions& common, int figure, const std::string& var,
              const std::vector<double>& values, int n_iot, int n_embb,
              std::optional<double> w1_opt, std::optional<int> drops_opt,
              const std::string& out_csv, const std::string& out_json) {
    RunConfig cfg = common.load();
    if (drops_opt) cfg.drops = *drops_opt;
    cfg.validate();
    SweepContext ctx = cfg.sweep_context();
    const double w1 = w1_opt.value_or(cfg.w1);

    std::vector<SweepRecord> records;
    if (figure != 0) {
        records = run_figure_sweep(figure, ctx);
    } else if (!var.empty()) {
        if (values.empty())
            throw std::invalid_argument("--values is required with --var");
        if (var == "group_size") {
            std::vector<int> ns(values.begin(), values.end());
            records = sweep_group_size(ns, w1, ctx);
        } else if (var == "n_embb") {
            std::vector<int> ns(values.begin(), values.end());
            records = sweep_embb_count(ns, n_iot, w1, ctx);
        } else if (var == "circuit_power_mw") {
            records = sweep_circuit_power(values, n_iot, n_embb, w1, ctx);
        } else if (var == "w1") {
            records = sweep_weight(values, n_iot, n_embb, ctx);
        } else {
            throw std::invalid_argument("unknown sweep variable: " + var);
        }
    } else {
        throw std::invalid_argument("either --figure or --var is required");
    }

    const std::string csv = sweep_csv_string(records);
    if (out_csv.empty())
        std::cout << csv;
    else
        write_file_atomically(out_csv, csv);
    if (!out_json.empty())
        write_file_atomically(out_json, sweep_records_to_json(records));
    return kExitOk;
}

int cmd_oracle_check(const CommonOptions& common, const std::string& kind_name,
                     int trials, int grid_n) {
    const RunConfig cfg = common.load();
    const SubproblemKind kind = subproblem_kind_from_string(kind_name);
    const GridSpec grid{grid_n, grid_n};

    Rng rng(cfg.seed);
    double max_gap_noma = 0.0, max_gap_oma = 0.0;
    int dominance_violations = 0;
    for (int t = 0; t < trials; ++t) {
        const ClusterSpec spec =
            random_cluster_spec(kind, rng, cfg.p_max_mw, cfg.p_max_mw);
        const OracleResult oma_ref = oracle_solve(spec, MaScheme::OMA, cfg.sys, grid);
        const double oma_obj = solve_oma(spec, cfg.sys, cfg.solver).objective;
        max_gap_oma = std::max(
            max_gap_oma, (oma_ref.objective - oma_obj) /
                             std::max(std::abs(oma_ref.objective), 1e-300));
        const OracleResult noma_ref =
            oracle_solve(spec, MaScheme::NOMA, cfg.sys, grid);
        if (kind == SubproblemKind::EE) {
            if (oma_obj < noma_ref.objective - 1e-12) ++dominance_violations;
        } else {
            const double noma_obj = solve_noma(spec, cfg.sys, cfg.solver).objective;
            max_gap_noma = std::max(
                max_gap_noma, (noma_ref.objective - noma_obj) /
                                  std::max(std::abs(noma_ref.objective), 1e-300));
        }
    }

    json out{{"kind", to_string(kind)},
             {"trials", trials},
             {"seed", cfg.seed},
             {"grid", grid_n},
             {"max_rel_gap_oma", max_gap_oma}};
    if (kind == SubproblemKind::EE)
        out["dominance_violations"] = dominance_violations;
    else
        out["max_rel_gap_noma"] = max_gap_noma;
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uplink two-user NOMA/OMA power allocation and clustering simulator"};
    app.require_subcommand(1);
    // Let --config/--seed appear after the subcommand name as well.
    app.fallthrough();

    CommonOptions common;
    app.add_option("--config", common.config_path, "JSON configuration file");
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "override the RNG seed");

    // solve
    auto* solve = app.add_subcommand("solve", "solve one two-user cluster");
    std::string kind_name;
    double gamma1 = 1.0, gamma2 = 100.0;
    double w1_value = 0.0;
    std::string scheme_name;
    bool adaptive = false;
    solve->add_option("--kind", kind_name, "subproblem kind: SS, ES, SE or EE")
        ->required();
    solve->add_option("--gamma1", gamma1, "weak-user normalized gain (1/mW)");
    solve->add_option("--gamma2", gamma2, "strong-user normalized gain (1/mW)");
    auto* w1_opt_solve = solve->add_option("--w1", w1_value, "weak-user weight");
    auto* scheme_opt =
        solve->add_option("--scheme", scheme_name, "force a scheme: NOMA or OMA");
    solve->add_flag("--adaptive", adaptive, "pick the better scheme (default)");
    scheme_opt->excludes("--adaptive");

    // cluster
    auto* cluster = app.add_subcommand("cluster", "build and print a clustering plan");
    std::string scenario_file;
    bool deterministic = false;
    std::vector<int> random_counts;
    std::string method = "proposed";
    auto* file_opt = cluster->add_option("--scenario-file", scenario_file,
                                         "scenario JSON document");
    auto* det_opt = cluster->add_flag("--deterministic", deterministic,
                                      "use the fixed 10-user layout");
    auto* rand_opt =
        cluster->add_option("--random", random_counts, "random drop: N_IOT N_EMBB")
            ->expected(2);
    file_opt->excludes(det_opt)->excludes(rand_opt);
    det_opt->excludes(rand_opt);
    cluster->add_option("--method", method,
                        "proposed, random or strongest-weakest");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a Monte Carlo sweep, write CSV");
    int figure = 0;
    std::string var;
    std::vector<double> values;
    int n_iot = 6, n_embb = 8;
    double sweep_w1 = 0.0;
    int drops = 0;
    std::string out_csv, out_json;
    auto* fig_opt = sweep->add_option("--figure", figure, "preset sweep: 9, 10, 11 or 12")
                        ->check(CLI::IsMember({9, 10, 11, 12}));
    auto* var_opt = sweep->add_option(
        "--var", var, "custom sweep variable: group_size, n_embb, circuit_power_mw, w1");
    sweep->add_option("--values", values, "custom sweep points")->delimiter(',');
    sweep->add_option("--n-iot", n_iot, "IoT count for custom sweeps");
    sweep->add_option("--n-embb", n_embb, "eMBB count for custom sweeps");
    auto* w1_opt_sweep = sweep->add_option("--w1", sweep_w1, "weight for custom sweeps");
    auto* drops_opt = sweep->add_option("--drops", drops, "Monte Carlo drops per point");
    sweep->add_option("--out", out_csv, "CSV output path (default: stdout)");
    sweep->add_option("--json", out_json, "also write a JSON mirror with per-drop data");
    fig_opt->excludes(var_opt);

    // oracle-check
    auto* oracle = app.add_subcommand("oracle-check",
                                      "compare solvers against the grid oracle");
    std::string oracle_kind;
    int trials = 100;
    int grid_n = 1000;
    oracle->add_option("--kind", oracle_kind, "subproblem kind")->required();
    oracle->add_option("--trials", trials, "number of random specs")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--grid", grid_n, "oracle grid resolution per axis")
        ->check(CLI::Range(2, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*seed_opt) common.seed = seed_value;
        if (solve->parsed())
            return cmd_solve(common, kind_name, gamma1, gamma2,
                             *w1_opt_solve ? std::optional<double>(w1_value)
                                           : std::nullopt,
                             scheme_name, adaptive);
        if (cluster->parsed())
            return cmd_cluster(common, scenario_file, deterministic, random_counts,
                               method);
        if (sweep->parsed())
            return cmd_sweep(common, figure, var, values, n_iot, n_embb,
                             *w1_opt_sweep ? std::optional<double>(sweep_w1)
                                           : std::nullopt,
                             *drops_opt ? std::optional<int>(drops) : std::nullopt,
                             out_csv, out_json);
        if (oracle->parsed())
            return cmd_oracle_check(common, oracle_kind, trials, grid_n);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    }
}
