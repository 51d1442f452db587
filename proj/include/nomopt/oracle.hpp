// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "nomopt/model.hpp"
#include "nomopt/rng.hpp"

namespace nomopt {

/// Resolution of the exhaustive power grid. Grids always span
/// [0, budget] inclusive on both axes.
struct GridSpec {
    int n1 = 1000;
    int n2 = 1000;

    void validate() const {
        if (n1 < 2 || n2 < 2)
            throw std::invalid_argument("grid resolutions must be >= 2");
    }
};

struct OracleResult {
    double p1_mw = 0.0;
    double p2_mw = 0.0;
    double objective = 0.0;
    /// Empirical discretization bound: the largest adjacent-cell
    /// objective change along each axis, summed. The true maximum lies
    /// within roughly this much of the grid maximum.
    double cell_gap_bound = 0.0;
};

/// Exhaustive evaluation of the weighted cluster objective over the
/// feasible power grid for the given scheme. Both axes are always
/// searched, even for kinds where a solver can pin one of them. Ties
/// resolve to the smallest (p1, p2) lexicographically.
OracleResult oracle_solve(const ClusterSpec& spec, MaScheme scheme,
                          const SystemParams& params, const GridSpec& grid);

struct BestMaResult {
    MaScheme scheme = MaScheme::OMA;
    double objective = 0.0;
    OracleResult noma;
    OracleResult oma;
};

/// Grid-evaluates both schemes and reports the better one. Differences
/// within the combined grid gap count as ties and resolve to OMA (the
/// simpler receiver).
BestMaResult oracle_best_ma(const ClusterSpec& spec, const SystemParams& params,
                            const GridSpec& grid);

/// Seeded random cluster spec for verification runs: gains uniform in
/// [0.1, 100] per mW (ordered), w1 uniform in [0.05, 0.95].
ClusterSpec random_cluster_spec(SubproblemKind kind, Rng& rng,
                                double p1_max_mw = 10.0, double p2_max_mw = 10.0);

}  // namespace nomopt
