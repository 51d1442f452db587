// SPDX-License-Identifier: Apache-2.0
#include "nomopt/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nomopt/adaptive.hpp"
#include "nomopt/oracle.hpp"
#include "nomopt/rng.hpp"
#include "nomopt/solver_noma.hpp"
#include "nomopt/solver_oma.hpp"

namespace nomopt {

const char* to_string(Strategy s) noexcept {
    switch (s) {
        case Strategy::ProposedAdaptive: return "ProposedAdaptive";
        case Strategy::ProposedNOMA: return "ProposedNOMA";
        case Strategy::ProposedOMA: return "ProposedOMA";
        case Strategy::RandomNOMA: return "RandomNOMA";
        case Strategy::RandomOMA: return "RandomOMA";
    }
    return "?";
}

Strategy strategy_from_string(const std::string& s) {
    for (Strategy st : all_strategies())
        if (s == to_string(st)) return st;
    throw std::invalid_argument("unknown strategy: " + s);
}

const std::vector<Strategy>& all_strategies() {
    static const std::vector<Strategy> list = {
        Strategy::ProposedAdaptive, Strategy::ProposedNOMA, Strategy::ProposedOMA,
        Strategy::RandomNOMA, Strategy::RandomOMA};
    return list;
}

namespace {

constexpr std::uint64_t kPlanSeedSalt = 0xD1B54A32D192ED03ULL;

/// Compensated (Neumaier) sum over ascending-sorted addends. Totals must
/// not depend on how clusters group the per-user terms, so the sum is
/// made canonical: same multiset of addends, same result.
double canonical_sum(std::vector<double> addends) {
    std::sort(addends.begin(), addends.end());
    double sum = 0.0, comp = 0.0;
    for (double x : addends) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

void ensure_converged(const SolveResult& r, const char* what) {
    if (!r.trace.converged)
        throw std::runtime_error(std::string("solver did not converge: ") + what);
}

/// EE-kind pairs have no NOMA solver (OMA dominates); forced-NOMA
/// baselines evaluate them on a coarse grid instead.
constexpr GridSpec kForcedEeGrid{200, 200};

ClusterSpec spec_for_pair(const PairAssignment& pair, double w1, double p_max_mw) {
    ClusterSpec spec;
    spec.gamma1 = pair.weak.gain;
    spec.gamma2 = pair.strong.gain;
    spec.class1 = pair.weak.cls;
    spec.class2 = pair.strong.cls;
    spec.w1 = w1;
    spec.p1_max_mw = p_max_mw;
    spec.p2_max_mw = p_max_mw;
    return spec;
}

void append_oma_terms(const ClusterSpec& spec, const SolveResult& oma,
                      const SystemParams& params, std::vector<double>& addends) {
    const auto terms = weighted_terms(spec, oma.alloc, params);
    addends.push_back(terms[0]);
    addends.push_back(terms[1]);
}

void evaluate_pair(const PairAssignment& pair, PairPolicy effective, double w1,
                   const SystemParams& params, double p_max_mw,
                   const SolverConfig& config, std::vector<double>& addends) {
    const ClusterSpec spec = spec_for_pair(pair, w1, p_max_mw);
    switch (effective) {
        case PairPolicy::Adaptive: {
            const ClusterDecision d = decide_cluster(spec, params, config);
            ensure_converged(d.oma_result, "adaptive OMA branch");
            if (d.noma_result) ensure_converged(*d.noma_result, "adaptive NOMA branch");
            if (d.chosen == MaScheme::NOMA)
                addends.push_back(d.noma_result->objective);
            else
                append_oma_terms(spec, d.oma_result, params, addends);
            return;
        }
        case PairPolicy::ForceOMA: {
            const SolveResult r = solve_oma(spec, params, config);
            ensure_converged(r, "forced OMA");
            append_oma_terms(spec, r, params, addends);
            return;
        }
        case PairPolicy::ForceNOMA: {
            if (spec.kind() == SubproblemKind::EE) {
                addends.push_back(
                    oracle_solve(spec, MaScheme::NOMA, params, kForcedEeGrid).objective);
                return;
            }
            const SolveResult r = solve_noma(spec, params, config);
            ensure_converged(r, "forced NOMA");
            addends.push_back(r.objective);
            return;
        }
    }
}

void evaluate_solo(const UserRecord& user, double w1, const SystemParams& params,
                   double p_max_mw, const SolverConfig& config,
                   std::vector<double>& addends) {
    // A solo user is trivially the strongest of its cluster and takes
    // the strong-user share of the weights; it is always served in OMA
    // at its single-user optimum.
    const double share = 1.0 - w1;
    const double budget = 2.0 * p_max_mw;
    if (user.cls == UserClass::EMBB) {
        addends.push_back(share / params.k_s * se_oma(user.gain, budget));
    } else {
        const auto d = dinkelbach_ee(user.gain, budget, params, config);
        if (!d.trace.converged)
            throw std::runtime_error("solver did not converge: solo Dinkelbach");
        addends.push_back(share / params.k_e * d.ee);
    }
}

}  // namespace

double evaluate_strategy(const Scenario& scenario, Strategy strategy, double w1,
                         const SystemParams& params, double p_max_mw,
                         const SolverConfig& config, std::uint64_t plan_seed) {
    params.validate();
    config.validate();
    if (w1 < 0.0 || w1 > 1.0) throw std::invalid_argument("w1 must lie in [0, 1]");
    if (p_max_mw <= 0.0) throw std::invalid_argument("p_max must be > 0");
    if (scenario.users.empty()) return 0.0;

    ClusterPlan plan;
    switch (strategy) {
        case Strategy::ProposedAdaptive:
        case Strategy::ProposedNOMA:
        case Strategy::ProposedOMA:
            plan = build_proposed_plan(scenario.records(UserClass::IoT),
                                       scenario.records(UserClass::EMBB));
            break;
        case Strategy::RandomNOMA:
        case Strategy::RandomOMA:
            plan = build_random_plan(scenario.records(), plan_seed);
            break;
    }

    std::vector<double> addends;
    addends.reserve(2 * plan.pairs.size() + plan.solos.size());
    for (const auto& pair : plan.pairs) {
        PairPolicy effective = pair.policy;
        if (strategy == Strategy::ProposedNOMA || strategy == Strategy::RandomNOMA)
            effective = PairPolicy::ForceNOMA;
        else if (strategy == Strategy::ProposedOMA || strategy == Strategy::RandomOMA)
            effective = PairPolicy::ForceOMA;
        evaluate_pair(pair, effective, w1, params, p_max_mw, config, addends);
    }
    for (const auto& solo : plan.solos)
        evaluate_solo(solo, w1, params, p_max_mw, config, addends);

    // Normalized per-Hz total to bits/J: bandwidth times the mW-to-W
    // factor absorbed by the (power-valued) normalization constants.
    return canonical_sum(std::move(addends)) * params.bandwidth_hz * 1000.0;
}

namespace {

struct SweepPoint {
    double value = 0.0;
    int n_iot = 0;
    int n_embb = 0;
    double w1 = 0.5;
    SystemParams sys;
};

std::vector<SweepRecord> run_sweep(const std::string& sweep_var,
                                   const std::vector<SweepPoint>& points,
                                   const SweepContext& ctx) {
    if (points.empty()) throw std::invalid_argument("sweep needs at least one point");
    if (ctx.drops < 1) throw std::invalid_argument("drops must be >= 1");

    std::vector<SweepRecord> records;
    records.reserve(points.size() * all_strategies().size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const SweepPoint& pt = points[i];
        // Common random numbers: every strategy sees the same drops.
        std::vector<Scenario> scenarios;
        std::vector<std::uint64_t> plan_seeds;
        scenarios.reserve(static_cast<std::size_t>(ctx.drops));
        for (int d = 0; d < ctx.drops; ++d) {
            const std::uint64_t seed =
                derive_seed(ctx.base_seed, static_cast<std::uint64_t>(i),
                            static_cast<std::uint64_t>(d));
            scenarios.push_back(
                random_scenario(pt.n_iot, pt.n_embb, ctx.geom, ctx.chan, seed));
            plan_seeds.push_back(seed ^ kPlanSeedSalt);
        }
        for (Strategy st : all_strategies()) {
            SweepRecord rec;
            rec.sweep_var = sweep_var;
            rec.value = pt.value;
            rec.strategy = st;
            rec.drops = ctx.drops;
            rec.seed = ctx.base_seed;
            rec.per_drop.reserve(static_cast<std::size_t>(ctx.drops));
            double sum = 0.0;
            for (int d = 0; d < ctx.drops; ++d) {
                const double total =
                    evaluate_strategy(scenarios[static_cast<std::size_t>(d)], st,
                                      pt.w1, pt.sys, ctx.p_max_mw, ctx.solver,
                                      plan_seeds[static_cast<std::size_t>(d)]);
                rec.per_drop.push_back(total);
                sum += total;
            }
            rec.mean_objective = sum / ctx.drops;
            records.push_back(std::move(rec));
        }
    }
    return records;
}

}  // namespace

std::vector<SweepRecord> sweep_group_size(const std::vector<int>& group_sizes,
                                          double w1, const SweepContext& ctx) {
    std::vector<SweepPoint> pts;
    for (int n : group_sizes)
        pts.push_back({static_cast<double>(n), n, n, w1, ctx.sys});
    return run_sweep("group_size", pts, ctx);
}

std::vector<SweepRecord> sweep_embb_count(const std::vector<int>& embb_counts,
                                          int n_iot, double w1,
                                          const SweepContext& ctx) {
    std::vector<SweepPoint> pts;
    for (int n : embb_counts)
        pts.push_back({static_cast<double>(n), n_iot, n, w1, ctx.sys});
    return run_sweep("n_embb", pts, ctx);
}

std::vector<SweepRecord> sweep_circuit_power(const std::vector<double>& q_values_mw,
                                             int n_iot, int n_embb, double w1,
                                             const SweepContext& ctx) {
    std::vector<SweepPoint> pts;
    for (double q : q_values_mw) {
        SweepPoint pt{q, n_iot, n_embb, w1, ctx.sys};
        pt.sys.circuit_power_mw = q;
        pts.push_back(pt);
    }
    return run_sweep("circuit_power_mw", pts, ctx);
}

std::vector<SweepRecord> sweep_weight(const std::vector<double>& w1_values,
                                      int n_iot, int n_embb,
                                      const SweepContext& ctx) {
    std::vector<SweepPoint> pts;
    for (double w1 : w1_values)
        pts.push_back({w1, n_iot, n_embb, w1, ctx.sys});
    return run_sweep("w1", pts, ctx);
}

namespace {

std::vector<double> default_w1_grid() {
    std::vector<double> grid;
    for (int i = 1; i <= 19; ++i) grid.push_back(i * 0.05);
    return grid;
}

}  // namespace

std::vector<SweepRecord> run_figure_sweep(int figure, SweepContext ctx) {
    switch (figure) {
        case 9:
            ctx.sys.k_s = 30.0;
            ctx.sys.k_e = 1.0;
            return sweep_group_size({2, 4, 6, 8, 10}, 0.4, ctx);
        case 10:
            ctx.sys.k_s = 100.0;
            ctx.sys.k_e = 1.0;
            return sweep_embb_count({2, 4, 6, 8, 10, 12, 14}, 6, 0.5, ctx);
        case 11:
            ctx.sys.k_s = 30.0;
            ctx.sys.k_e = 1.0;
            return sweep_circuit_power({1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0}, 8, 8,
                                       0.5, ctx);
        case 12:
            ctx.sys.k_s = 100.0;
            ctx.sys.k_e = 1.0;
            return sweep_weight(default_w1_grid(), 6, 8, ctx);
        default:
            throw std::invalid_argument("unknown figure sweep: " +
                                        std::to_string(figure));
    }
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
    out << "sweep_var,value,strategy,mean_objective_bits_per_joule,drops,seed\n";
    for (const auto& r : records)
        out << r.sweep_var << ',' << format_double(r.value) << ','
            << to_string(r.strategy) << ',' << format_double(r.mean_objective) << ','
            << r.drops << ',' << r.seed << '\n';
}

std::string sweep_csv_string(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    write_sweep_csv(records, out);
    return out.str();
}

std::string sweep_records_to_json(const std::vector<SweepRecord>& records) {
    nlohmann::json doc;
    doc["records"] = nlohmann::json::array();
    for (const auto& r : records)
        doc["records"].push_back({{"sweep_var", r.sweep_var},
                                  {"value", r.value},
                                  {"strategy", to_string(r.strategy)},
                                  {"mean_objective_bits_per_joule", r.mean_objective},
                                  {"drops", r.drops},
                                  {"seed", r.seed},
                                  {"per_drop", r.per_drop}});
    return doc.dump(2);
}

}  // namespace nomopt
