// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nomopt/model.hpp"
#include "nomopt/numeric.hpp"
#include "nomopt/solver_types.hpp"

namespace nomopt {

/// Outcome of per-cluster scheme selection. For all-IoT clusters the
/// NOMA solve is skipped entirely (OMA provably dominates), so
/// noma_result is absent exactly then.
struct ClusterDecision {
    ClusterSpec spec;
    MaScheme chosen = MaScheme::OMA;
    std::optional<SolveResult> noma_result;
    SolveResult oma_result;
    double objective = 0.0;
};

/// Solves the cluster under both schemes and keeps the better objective.
/// Ties go to OMA (simpler receiver). EE-kind clusters go straight to
/// OMA without a NOMA solve.
ClusterDecision decide_cluster(const ClusterSpec& spec, const SystemParams& params,
                               const SolverConfig& config);

struct W1MinResult {
    std::optional<double> w1_min;  ///< smallest grid point where NOMA wins
    /// True when the grid shows OMA-better strictly below the threshold
    /// and NOMA-at-or-above from it on; false flags an unexpected sign
    /// pattern (see diagnostic).
    bool single_threshold = true;
    std::string diagnostic;
};

/// Threshold scan over precomputed NOMA-minus-OMA objective differences
/// on an increasing w1 grid.
W1MinResult scan_w1_threshold(const std::vector<double>& w1_grid,
                              const std::vector<double>& noma_minus_oma);

/// Finds the smallest weight at which NOMA matches or beats OMA for a
/// weak-eMBB / strong-IoT cluster, by solving both schemes on each grid
/// point. The template's w1 is ignored.
W1MinResult find_w1_min(const ClusterSpec& spec_template, const SystemParams& params,
                        const SolverConfig& config,
                        const std::vector<double>& w1_grid);

}  // namespace nomopt
