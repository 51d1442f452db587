// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace nomopt {

/// Shared iteration/tolerance knobs for all solvers.
struct SolverConfig {
    double tol_objective = 1e-9;  ///< absolute stop tolerance on objective change
    int max_outer_iters = 200;    ///< cap on auxiliary-variable update rounds
    int max_inner_iters = 200;    ///< cap on 1-D search steps
    /// Power tolerance in mW; 0 selects 1e-9 * (hi - lo) per search interval.
    double tol_x_mw = 0.0;
    /// Initial points as fractions of the power budget.
    std::vector<double> multistart_fractions = {0.0, 0.5, 1.0};

    void validate() const {
        if (tol_objective <= 0.0) throw std::invalid_argument("tol_objective must be > 0");
        if (max_outer_iters < 1) throw std::invalid_argument("max_outer_iters must be >= 1");
        if (max_inner_iters < 1) throw std::invalid_argument("max_inner_iters must be >= 1");
        if (tol_x_mw < 0.0) throw std::invalid_argument("tol_x must be >= 0");
        for (double f : multistart_fractions)
            if (f < 0.0 || f > 1.0)
                throw std::invalid_argument("multistart fractions must lie in [0, 1]");
        if (multistart_fractions.empty())
            throw std::invalid_argument("at least one multistart fraction required");
    }
};

struct Maximum1d {
    double x = 0.0;
    double value = 0.0;
};

/// Golden-section maximization of a concave (or unimodal) function on
/// [lo, hi]. Returns a point within the x-tolerance of a maximizer; the
/// end points are always candidates, so monotone functions resolve to
/// the correct boundary.
template <typename F>
Maximum1d maximize_concave_1d(F&& f, double lo, double hi, const SolverConfig& config) {
    if (!(lo <= hi)) throw std::invalid_argument("maximize_concave_1d: lo > hi");

    auto eval = [&](double x) {
        const double v = f(x);
        if (!std::isfinite(v))
            throw std::runtime_error("maximize_concave_1d: non-finite objective at x = " +
                                     std::to_string(x));
        return v;
    };

    Maximum1d best{lo, eval(lo)};
    if (hi > lo) {
        const double fhi = eval(hi);
        if (fhi > best.value) best = {hi, fhi};

        const double tol_x =
            config.tol_x_mw > 0.0 ? config.tol_x_mw : 1e-9 * (hi - lo);
        constexpr double inv_phi = 0.6180339887498949;  // 1/golden ratio

        double a = lo, b = hi;
        double x1 = b - inv_phi * (b - a);
        double x2 = a + inv_phi * (b - a);
        double f1 = eval(x1);
        double f2 = eval(x2);
        for (int iter = 0; iter < config.max_inner_iters && (b - a) > tol_x; ++iter) {
            if (f1 >= f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - inv_phi * (b - a);
                f1 = eval(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + inv_phi * (b - a);
                f2 = eval(x2);
            }
        }
        const double xm = 0.5 * (a + b);
        const double fm = eval(xm);
        if (fm > best.value) best = {xm, fm};
        if (f1 > best.value) best = {x1, f1};
        if (f2 > best.value) best = {x2, f2};
    }
    return best;
}

}  // namespace nomopt
