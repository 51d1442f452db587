// SPDX-License-Identifier: Apache-2.0
#include "nomopt/adaptive.hpp"

#include <cmath>

#include "nomopt/solver_noma.hpp"
#include "nomopt/solver_oma.hpp"

namespace nomopt {

ClusterDecision decide_cluster(const ClusterSpec& spec, const SystemParams& params,
                               const SolverConfig& config) {
    spec.validate();

    ClusterDecision d;
    d.spec = spec;
    d.oma_result = solve_oma(spec, params, config);
    if (spec.kind() == SubproblemKind::EE) {
        d.chosen = MaScheme::OMA;
        d.objective = d.oma_result.objective;
        return d;
    }
    d.noma_result = solve_noma(spec, params, config);
    if (d.noma_result->objective > d.oma_result.objective) {
        d.chosen = MaScheme::NOMA;
        d.objective = d.noma_result->objective;
    } else {
        d.chosen = MaScheme::OMA;
        d.objective = d.oma_result.objective;
    }
    return d;
}

W1MinResult scan_w1_threshold(const std::vector<double>& w1_grid,
                              const std::vector<double>& noma_minus_oma) {
    if (w1_grid.size() != noma_minus_oma.size())
        throw std::invalid_argument("scan_w1_threshold: size mismatch");
    if (w1_grid.empty()) throw std::invalid_argument("scan_w1_threshold: empty grid");
    for (std::size_t i = 0; i + 1 < w1_grid.size(); ++i)
        if (!(w1_grid[i] < w1_grid[i + 1]))
            throw std::invalid_argument("scan_w1_threshold: grid must be increasing");

    W1MinResult r;
    int sign_changes = 0;
    bool prev_noma = noma_minus_oma.front() >= 0.0;
    if (prev_noma) r.w1_min = w1_grid.front();
    for (std::size_t i = 1; i < w1_grid.size(); ++i) {
        const bool noma_wins = noma_minus_oma[i] >= 0.0;
        if (noma_wins != prev_noma) {
            ++sign_changes;
            if (noma_wins && !r.w1_min) r.w1_min = w1_grid[i];
        }
        prev_noma = noma_wins;
    }
    if (sign_changes > 1 || (sign_changes == 1 && !prev_noma)) {
        r.single_threshold = false;
        r.diagnostic = "NOMA-vs-OMA sign changes " + std::to_string(sign_changes) +
                       " times across the grid; no single threshold";
    }
    return r;
}

W1MinResult find_w1_min(const ClusterSpec& spec_template, const SystemParams& params,
                        const SolverConfig& config,
                        const std::vector<double>& w1_grid) {
    spec_template.validate();
    if (spec_template.kind() != SubproblemKind::SE)
        throw std::invalid_argument("find_w1_min: only the weak-eMBB/strong-IoT kind "
                                    "has a weight threshold");
    for (double w : w1_grid)
        if (w <= 0.0 || w >= 1.0)
            throw std::invalid_argument("find_w1_min: grid points must lie in (0, 1)");

    std::vector<double> diff;
    diff.reserve(w1_grid.size());
    ClusterSpec spec = spec_template;
    for (double w1 : w1_grid) {
        spec.w1 = w1;
        const double noma = solve_noma_se(spec, params, config).objective;
        const double oma = solve_oma(spec, params, config).objective;
        diff.push_back(noma - oma);
    }
    return scan_w1_threshold(w1_grid, diff);
}

}  // namespace nomopt
