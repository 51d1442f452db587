// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nomopt/model.hpp"
#include "nomopt/numeric.hpp"
#include "nomopt/solver_types.hpp"

namespace nomopt {

struct DinkelbachResult {
    double p_mw = 0.0;
    double ee = 0.0;  ///< bits/J/Hz at the maximizer
    DinkelbachTrace trace;
};

/// Maximizes the single-user energy efficiency log2(1+gamma*p)/(phi*p+Q)
/// on [0, p_max] by Dinkelbach's parametric iteration. The inner problem
/// log2(1+gamma*p) - lambda*(phi*p+Q) is strictly concave, so each step
/// uses its closed-form stationary point clipped to the budget.
DinkelbachResult dinkelbach_ee(double gamma, double p_max_mw,
                               const SystemParams& params,
                               const SolverConfig& config);

/// OMA solution for any subproblem kind with doubled per-user budgets:
/// SE terms take full power in closed form, EE terms run Dinkelbach.
SolveResult solve_oma(const ClusterSpec& spec, const SystemParams& params,
                      const SolverConfig& config);

}  // namespace nomopt
