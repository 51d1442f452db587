// SPDX-License-Identifier: Apache-2.0
#include "nomopt/solver_oma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nomopt {

DinkelbachResult dinkelbach_ee(double gamma, double p_max_mw,
                               const SystemParams& params,
                               const SolverConfig& config) {
    if (gamma <= 0.0) throw std::invalid_argument("dinkelbach_ee: gamma must be > 0");
    if (p_max_mw <= 0.0) throw std::invalid_argument("dinkelbach_ee: p_max must be > 0");
    params.validate();
    config.validate();

    const double phi = params.phi;
    const double q = params.circuit_power_mw;
    constexpr double epsilon = 1e-10;

    auto rate = [&](double p) { return std::log2(1.0 + gamma * p); };
    auto power = [&](double p) { return phi * p + q; };
    auto inner_argmax = [&](double lambda) {
        if (lambda <= 0.0) return p_max_mw;  // numerator strictly increasing
        const double stationary = 1.0 / (lambda * phi * std::numbers::ln2) - 1.0 / gamma;
        return std::clamp(stationary, 0.0, p_max_mw);
    };

    DinkelbachResult result;
    double lambda = 0.0;
    for (int iter = 0; iter < config.max_outer_iters; ++iter) {
        const double p = inner_argmax(lambda);
        const double residual = rate(p) - lambda * power(p);
        result.trace.lambdas.push_back(lambda);
        result.trace.residuals.push_back(residual);
        result.p_mw = p;
        result.ee = rate(p) / power(p);
        if (residual < epsilon) {
            result.trace.converged = true;
            break;
        }
        lambda = result.ee;
    }
    return result;
}

SolveResult solve_oma(const ClusterSpec& spec, const SystemParams& params,
                      const SolverConfig& config) {
    spec.validate();
    params.validate();

    const double b1 = spec.budget1(MaScheme::OMA);
    const double b2 = spec.budget2(MaScheme::OMA);

    SolveResult result;
    result.alloc.scheme = MaScheme::OMA;

    // SE terms are increasing in power, so eMBB users transmit at full
    // doubled budget; IoT users take their standalone EE maximizer.
    if (spec.class1 == UserClass::EMBB) {
        result.alloc.p1_mw = b1;
    } else {
        auto d = dinkelbach_ee(spec.gamma1, b1, params, config);
        result.alloc.p1_mw = d.p_mw;
        result.dinkelbach_traces.push_back(std::move(d.trace));
    }
    if (spec.class2 == UserClass::EMBB) {
        result.alloc.p2_mw = b2;
    } else {
        auto d = dinkelbach_ee(spec.gamma2, b2, params, config);
        result.alloc.p2_mw = d.p_mw;
        result.dinkelbach_traces.push_back(std::move(d.trace));
    }

    result.objective = weighted_objective(spec, result.alloc, params);
    result.trace.objectives.push_back(result.objective);
    result.trace.converged = true;
    for (const auto& t : result.dinkelbach_traces)
        result.trace.converged = result.trace.converged && t.converged;
    return result;
}

}  // namespace nomopt
