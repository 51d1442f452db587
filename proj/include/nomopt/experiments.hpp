// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nomopt/clustering.hpp"
#include "nomopt/model.hpp"
#include "nomopt/numeric.hpp"
#include "nomopt/scenario.hpp"

namespace nomopt {

/// The five clustering/MA combinations compared in the sweeps. The
/// Proposed* strategies use the proposed pairing; Random* use a seeded
/// random matching. Force strategies apply their scheme to every pair
/// unconditionally; only ProposedAdaptive honors per-pair policies.
enum class Strategy {
    ProposedAdaptive,
    ProposedNOMA,
    ProposedOMA,
    RandomNOMA,
    RandomOMA,
};

const char* to_string(Strategy s) noexcept;
Strategy strategy_from_string(const std::string& s);
const std::vector<Strategy>& all_strategies();

/// One output row: a sweep point, a strategy, and the mean total
/// objective (bits/J) over the Monte Carlo drops.
struct SweepRecord {
    std::string sweep_var;
    double value = 0.0;
    Strategy strategy = Strategy::ProposedAdaptive;
    double mean_objective = 0.0;  ///< bits/J
    int drops = 0;
    std::uint64_t seed = 0;          ///< base seed of the sweep
    std::vector<double> per_drop;    ///< per-drop totals (bits/J)
};

/// Total reported objective of one scenario under a strategy, in bits/J:
/// the normalized per-Hz weighted sum over all clusters and solos,
/// scaled once by bandwidth and the mW-to-W factor. plan_seed feeds the
/// random matching and must be shared across strategies for common
/// random numbers. Throws if any solve fails to converge.
double evaluate_strategy(const Scenario& scenario, Strategy strategy, double w1,
                         const SystemParams& params, double p_max_mw,
                         const SolverConfig& config, std::uint64_t plan_seed);

/// Environment shared by every sweep driver.
struct SweepContext {
    SystemParams sys;
    ChannelParams chan;
    CellGeometry geom;
    SolverConfig solver;
    double p_max_mw = 10.0;
    int drops = 50;
    std::uint64_t base_seed = 1;
};

// Sweep drivers. Each point evaluates all five strategies on `drops`
// seeded scenarios; strategies at the same point see identical drops.

/// Equal group sizes N_IoT = N_eMBB swept.
std::vector<SweepRecord> sweep_group_size(const std::vector<int>& group_sizes,
                                          double w1, const SweepContext& ctx);

/// N_eMBB swept at fixed N_IoT.
std::vector<SweepRecord> sweep_embb_count(const std::vector<int>& embb_counts,
                                          int n_iot, double w1,
                                          const SweepContext& ctx);

/// Circuit power swept at fixed group sizes.
std::vector<SweepRecord> sweep_circuit_power(const std::vector<double>& q_values_mw,
                                             int n_iot, int n_embb, double w1,
                                             const SweepContext& ctx);

/// Weak-user weight swept at fixed group sizes.
std::vector<SweepRecord> sweep_weight(const std::vector<double>& w1_values,
                                      int n_iot, int n_embb,
                                      const SweepContext& ctx);

/// Preconfigured sweeps 9..12 with their published parameter sets.
std::vector<SweepRecord> run_figure_sweep(int figure, SweepContext ctx);

/// CSV with header
/// sweep_var,value,strategy,mean_objective_bits_per_joule,drops,seed.
void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out);
std::string sweep_csv_string(const std::vector<SweepRecord>& records);

/// JSON mirror including the per-drop totals.
std::string sweep_records_to_json(const std::vector<SweepRecord>& records);

}  // namespace nomopt
