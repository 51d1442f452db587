// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nomopt/model.hpp"
#include "nomopt/numeric.hpp"
#include "nomopt/solver_types.hpp"

namespace nomopt {

/// NOMA power allocation for the all-spectral subproblem (both eMBB).
/// The strong user transmits at full budget; the weak user's power is
/// found by alternating a concave surrogate maximization with the
/// quadratic-transform auxiliary update.
SolveResult solve_noma_ss(const ClusterSpec& spec, const SystemParams& params,
                          const SolverConfig& config);

/// NOMA allocation for weak-IoT / strong-eMBB clusters: the weak user's
/// EE ratio and the strong user's log-ratio each get one auxiliary
/// variable; both are updated in closed form between 1-D searches.
SolveResult solve_noma_es(const ClusterSpec& spec, const SystemParams& params,
                          const SolverConfig& config);

/// NOMA allocation for weak-eMBB / strong-IoT clusters: both powers are
/// free and optimized by block-coordinate 1-D searches inside each
/// auxiliary round.
SolveResult solve_noma_se(const ClusterSpec& spec, const SystemParams& params,
                          const SolverConfig& config);

/// Dispatch on spec.kind(). There is no NOMA solver for the all-IoT
/// subproblem (OMA dominates it); requesting it is an error.
SolveResult solve_noma(const ClusterSpec& spec, const SystemParams& params,
                       const SolverConfig& config);

}  // namespace nomopt
