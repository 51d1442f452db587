// SPDX-License-Identifier: Apache-2.0
#include "nomopt/solver_noma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nomopt/solver_oma.hpp"

namespace nomopt {

namespace {

void require_kind(const ClusterSpec& spec, SubproblemKind kind, const char* who) {
    spec.validate();
    if (spec.kind() != kind)
        throw std::invalid_argument(std::string(who) + ": spec has kind " +
                                    to_string(spec.kind()) + ", expected " +
                                    to_string(kind));
}

double true_objective(const ClusterSpec& spec, double p1, double p2,
                      const SystemParams& params) {
    return weighted_objective(spec, {p1, p2, MaScheme::NOMA}, params);
}

SolveResult fixed_result(const ClusterSpec& spec, double p1, double p2,
                         const SystemParams& params,
                         std::array<double, 2> aux = {0.0, 0.0}) {
    SolveResult r;
    r.alloc = {p1, p2, MaScheme::NOMA};
    r.objective = true_objective(spec, p1, p2, params);
    r.trace.objectives.push_back(r.objective);
    r.trace.aux_values.push_back(aux);
    r.trace.converged = true;
    return r;
}

/// Upper bound on p1 keeping the strong-user log argument
/// 1 + 2*aux*sqrt(gamma2*p2) - aux^2*(1+gamma1*p1) at or above 1.
double p1_feasible_bound(double aux, double amplitude, double gamma1, double cap) {
    if (aux <= 0.0) return cap;
    const double bound = (2.0 * amplitude / aux - 1.0) / gamma1;
    return std::clamp(bound, 0.0, cap);
}

template <typename Step>
SolveResult run_multistart(const SolverConfig& config, Step&& one_start) {
    SolveResult best;
    best.objective = -std::numeric_limits<double>::infinity();
    for (double frac : config.multistart_fractions) {
        SolveResult r = one_start(frac);
        if (r.objective > best.objective) best = std::move(r);
    }
    return best;
}

/// Two-variable solves start from the full cross product of the
/// fractions: the (p1, p2) landscape can hold separate stationary basins
/// (weak user off versus on) that diagonal starts miss.
template <typename Step>
SolveResult run_multistart_2d(const SolverConfig& config, Step&& one_start) {
    SolveResult best;
    best.objective = -std::numeric_limits<double>::infinity();
    for (double f1 : config.multistart_fractions)
        for (double f2 : config.multistart_fractions) {
            SolveResult r = one_start(f1, f2);
            if (r.objective > best.objective) best = std::move(r);
        }
    return best;
}

}  // namespace

SolveResult solve_noma_ss(const ClusterSpec& spec, const SystemParams& params,
                          const SolverConfig& config) {
    require_kind(spec, SubproblemKind::SS, "solve_noma_ss");
    params.validate();
    config.validate();

    const double p1_max = spec.p1_max_mw;
    const double p2 = spec.p2_max_mw;  // strong-user SE is increasing in p2
    const double gamma1 = spec.gamma1;
    const double amplitude = std::sqrt(spec.gamma2 * p2);

    // Weak-user SE alone is increasing in p1; strong-user SE alone is
    // decreasing in it.
    if (spec.w1 == 1.0) return fixed_result(spec, p1_max, p2, params, {amplitude / (1.0 + gamma1 * p1_max), 0.0});
    if (spec.w1 == 0.0) return fixed_result(spec, 0.0, p2, params, {amplitude, 0.0});

    const double c1 = 2.0 * spec.w1 / params.k_s;
    const double c2 = 2.0 * spec.w2() / params.k_s;

    auto aux_update = [&](double p1) { return amplitude / (1.0 + gamma1 * p1); };

    return run_multistart(config, [&](double frac) {
        SolveResult r;
        double p1 = frac * p1_max;
        double aux = aux_update(p1);
        double obj = true_objective(spec, p1, p2, params);
        r.trace.objectives.push_back(obj);
        r.trace.aux_values.push_back({aux, 0.0});
        for (int iter = 0; iter < config.max_outer_iters; ++iter) {
            auto surrogate = [&](double x) {
                return c1 * std::log2(1.0 + gamma1 * x) +
                       c2 * std::log2(1.0 + 2.0 * aux * amplitude -
                                      aux * aux * (1.0 + gamma1 * x));
            };
            const double hi = p1_feasible_bound(aux, amplitude, gamma1, p1_max);
            p1 = maximize_concave_1d(surrogate, 0.0, hi, config).x;
            aux = aux_update(p1);
            const double next = true_objective(spec, p1, p2, params);
            r.trace.objectives.push_back(next);
            r.trace.aux_values.push_back({aux, 0.0});
            const bool done = std::abs(next - obj) < config.tol_objective;
            obj = next;
            if (done) {
                r.trace.converged = true;
                break;
            }
        }
        r.alloc = {p1, p2, MaScheme::NOMA};
        r.objective = obj;
        return r;
    });
}

SolveResult solve_noma_es(const ClusterSpec& spec, const SystemParams& params,
                          const SolverConfig& config) {
    require_kind(spec, SubproblemKind::ES, "solve_noma_es");
    params.validate();
    config.validate();

    const double p1_max = spec.p1_max_mw;
    const double p2 = spec.p2_max_mw;
    const double gamma1 = spec.gamma1;
    const double phi = params.phi;
    const double q = params.circuit_power_mw;
    const double amplitude = std::sqrt(spec.gamma2 * p2);

    if (spec.w1 == 0.0) return fixed_result(spec, 0.0, p2, params, {0.0, amplitude});
    if (spec.w1 == 1.0) {
        // Only the weak user's EE matters; its NOMA EE equals the
        // single-user ratio, so the Dinkelbach maximizer is exact.
        const double p1 = dinkelbach_ee(gamma1, p1_max, params, config).p_mw;
        return fixed_result(
            spec, p1, p2, params,
            {std::sqrt(std::log2(1.0 + gamma1 * p1)) / (phi * p1 + q),
             amplitude / (1.0 + gamma1 * p1)});
    }

    const double c1 = spec.w1 / params.k_e;
    const double c2 = 2.0 * spec.w2() / params.k_s;

    auto aux_ee_update = [&](double p1) {
        return std::sqrt(std::log2(1.0 + gamma1 * p1)) / (phi * p1 + q);
    };
    auto aux_sinr_update = [&](double p1) { return amplitude / (1.0 + gamma1 * p1); };

    return run_multistart(config, [&](double frac) {
        SolveResult r;
        double p1 = frac * p1_max;
        double aux_ee = aux_ee_update(p1);
        double aux_sinr = aux_sinr_update(p1);
        double obj = true_objective(spec, p1, p2, params);
        r.trace.objectives.push_back(obj);
        r.trace.aux_values.push_back({aux_ee, aux_sinr});
        for (int iter = 0; iter < config.max_outer_iters; ++iter) {
            auto surrogate = [&](double x) {
                const double rate = std::log2(1.0 + gamma1 * x);
                return c1 * (2.0 * aux_ee * std::sqrt(rate) -
                             aux_ee * aux_ee * (phi * x + q)) +
                       c2 * std::log2(1.0 + 2.0 * aux_sinr * amplitude -
                                      aux_sinr * aux_sinr * (1.0 + gamma1 * x));
            };
            const double hi = p1_feasible_bound(aux_sinr, amplitude, gamma1, p1_max);
            p1 = maximize_concave_1d(surrogate, 0.0, hi, config).x;
            aux_ee = aux_ee_update(p1);
            aux_sinr = aux_sinr_update(p1);
            const double next = true_objective(spec, p1, p2, params);
            r.trace.objectives.push_back(next);
            r.trace.aux_values.push_back({aux_ee, aux_sinr});
            const bool done = std::abs(next - obj) < config.tol_objective;
            obj = next;
            if (done) {
                r.trace.converged = true;
                break;
            }
        }
        r.alloc = {p1, p2, MaScheme::NOMA};
        r.objective = obj;
        return r;
    });
}

SolveResult solve_noma_se(const ClusterSpec& spec, const SystemParams& params,
                          const SolverConfig& config) {
    require_kind(spec, SubproblemKind::SE, "solve_noma_se");
    params.validate();
    config.validate();

    const double p1_max = spec.p1_max_mw;
    const double p2_max = spec.p2_max_mw;
    const double gamma1 = spec.gamma1;
    const double gamma2 = spec.gamma2;
    const double phi = params.phi;
    const double q = params.circuit_power_mw;

    if (spec.w1 == 1.0) return fixed_result(spec, p1_max, 0.0, params);
    if (spec.w1 == 0.0) {
        // Interference-free strong user: standalone Dinkelbach on the
        // NOMA budget.
        const double p2 = dinkelbach_ee(gamma2, p2_max, params, config).p_mw;
        return fixed_result(spec, 0.0, p2, params,
                            {std::sqrt(std::log2(1.0 + gamma2 * p2)) / (phi * p2 + q),
                             std::sqrt(gamma2 * p2)});
    }

    const double c1 = 2.0 * spec.w1 / params.k_s;
    const double c2 = spec.w2() / params.k_e;

    auto aux_sinr_update = [&](double p1, double p2) {
        return std::sqrt(gamma2 * p2) / (1.0 + gamma1 * p1);
    };
    auto log_term = [&](double p1, double p2, double aux_sinr) {
        const double arg = 1.0 + 2.0 * aux_sinr * std::sqrt(gamma2 * p2) -
                           aux_sinr * aux_sinr * (1.0 + gamma1 * p1);
        return std::max(0.0, std::log2(std::max(arg, 1e-300)));
    };
    auto aux_ee_update = [&](double p1, double p2, double aux_sinr) {
        return std::sqrt(log_term(p1, p2, aux_sinr)) / (phi * p2 + q);
    };

    return run_multistart_2d(config, [&](double frac1, double frac2) {
        SolveResult r;
        double p1 = frac1 * p1_max;
        double p2 = frac2 * p2_max;
        double aux_sinr = aux_sinr_update(p1, p2);
        double aux_ee = aux_ee_update(p1, p2, aux_sinr);
        double obj = true_objective(spec, p1, p2, params);
        r.trace.objectives.push_back(obj);
        r.trace.aux_values.push_back({aux_ee, aux_sinr});
        for (int iter = 0; iter < config.max_outer_iters; ++iter) {
            auto surrogate = [&](double x1, double x2) {
                return c1 * std::log2(1.0 + gamma1 * x1) +
                       c2 * (2.0 * aux_ee * std::sqrt(log_term(x1, x2, aux_sinr)) -
                             aux_ee * aux_ee * (phi * x2 + q));
            };
            // Block step in p1 under the current p2, then in p2; the
            // positivity constraint caps p1 above and p2 below.
            const double p1_hi = p1_feasible_bound(
                aux_sinr, std::sqrt(gamma2 * p2), gamma1, p1_max);
            p1 = maximize_concave_1d([&](double x) { return surrogate(x, p2); },
                                     0.0, p1_hi, config)
                     .x;
            double p2_lo = 0.0;
            if (aux_sinr > 0.0) {
                const double root = aux_sinr * (1.0 + gamma1 * p1) / 2.0;
                p2_lo = std::min(root * root / gamma2, p2_max);
            }
            p2 = maximize_concave_1d([&](double x) { return surrogate(p1, x); },
                                     p2_lo, p2_max, config)
                     .x;
            aux_sinr = aux_sinr_update(p1, p2);
            aux_ee = aux_ee_update(p1, p2, aux_sinr);
            const double next = true_objective(spec, p1, p2, params);
            r.trace.objectives.push_back(next);
            r.trace.aux_values.push_back({aux_ee, aux_sinr});
            const bool done = std::abs(next - obj) < config.tol_objective;
            obj = next;
            if (done) {
                r.trace.converged = true;
                break;
            }
        }
        r.alloc = {p1, p2, MaScheme::NOMA};
        r.objective = obj;
        return r;
    });
}

SolveResult solve_noma(const ClusterSpec& spec, const SystemParams& params,
                       const SolverConfig& config) {
    spec.validate();
    switch (spec.kind()) {
        case SubproblemKind::SS: return solve_noma_ss(spec, params, config);
        case SubproblemKind::ES: return solve_noma_es(spec, params, config);
        case SubproblemKind::SE: return solve_noma_se(spec, params, config);
        case SubproblemKind::EE:
            throw std::invalid_argument(
                "solve_noma: no NOMA solver for all-IoT clusters (OMA dominates)");
    }
    throw std::logic_error("unreachable");
}

}  // namespace nomopt
