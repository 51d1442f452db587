// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "nomopt/model.hpp"

namespace nomopt {

/// Progress of one fractional-programming solve: the true (untransformed)
/// objective after each auxiliary-variable round, plus the auxiliary
/// values themselves. The objective sequence is nondecreasing up to the
/// stop tolerance.
struct FpTrace {
    std::vector<double> objectives;
    std::vector<std::array<double, 2>> aux_values;  ///< (y,0), (y1,y2) or (y,t)
    bool converged = false;
};

/// Progress of one Dinkelbach ratio maximization: the lambda sequence is
/// nondecreasing and the final residual F(lambda) lies in [0, epsilon].
struct DinkelbachTrace {
    std::vector<double> lambdas;
    std::vector<double> residuals;
    bool converged = false;
};

/// Outcome of a per-cluster power-allocation solve.
struct SolveResult {
    PowerAllocation alloc;
    double objective = 0.0;
    FpTrace trace;
    /// EE subsolves performed on the OMA path (empty for NOMA solves).
    std::vector<DinkelbachTrace> dinkelbach_traces;
};

}  // namespace nomopt
