// SPDX-License-Identifier: Apache-2.0
#include "nomopt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace nomopt {

OracleResult oracle_solve(const ClusterSpec& spec, MaScheme scheme,
                          const SystemParams& params, const GridSpec& grid) {
    spec.validate();
    params.validate();
    grid.validate();

    const double b1 = spec.budget1(scheme);
    const double b2 = spec.budget2(scheme);
    const double step1 = b1 / (grid.n1 - 1);
    const double step2 = b2 / (grid.n2 - 1);

    const bool noma = scheme == MaScheme::NOMA;
    const double c1 = spec.w1 / (spec.class1 == UserClass::EMBB ? params.k_s : params.k_e);
    const double c2 = spec.w2() / (spec.class2 == UserClass::EMBB ? params.k_s : params.k_e);

    // The weak user never sees interference, so its metric depends on p1
    // only and hoists out of the inner loop.
    auto metric1 = [&](double p1) {
        if (spec.class1 == UserClass::EMBB)
            return noma ? se_noma_weak(spec.gamma1, p1) : se_oma(spec.gamma1, p1);
        return noma ? ee_noma_weak(spec.gamma1, p1, params)
                    : ee_oma(spec.gamma1, p1, params);
    };
    auto metric2 = [&](double p1, double p2) {
        if (spec.class2 == UserClass::EMBB)
            return noma ? se_noma_strong(spec.gamma1, p1, spec.gamma2, p2)
                        : se_oma(spec.gamma2, p2);
        return noma ? ee_noma_strong(spec.gamma1, p1, spec.gamma2, p2, params)
                    : ee_oma(spec.gamma2, p2, params);
    };

    OracleResult best;
    best.objective = -1.0;  // objective is nonnegative; any cell beats this
    double max_gap1 = 0.0, max_gap2 = 0.0;
    std::vector<double> prev_row(static_cast<std::size_t>(grid.n2), 0.0);

    for (int i = 0; i < grid.n1; ++i) {
        const double p1 = std::min(i * step1, b1);
        const double term1 = c1 * metric1(p1);
        double prev_cell = 0.0;
        for (int j = 0; j < grid.n2; ++j) {
            const double p2 = std::min(j * step2, b2);
            const double value = term1 + c2 * metric2(p1, p2);
            if (value > best.objective) {
                best.objective = value;
                best.p1_mw = p1;
                best.p2_mw = p2;
            }
            if (j > 0) max_gap2 = std::max(max_gap2, std::abs(value - prev_cell));
            if (i > 0)
                max_gap1 = std::max(
                    max_gap1, std::abs(value - prev_row[static_cast<std::size_t>(j)]));
            prev_cell = value;
            prev_row[static_cast<std::size_t>(j)] = value;
        }
    }
    best.cell_gap_bound = max_gap1 + max_gap2;
    return best;
}

BestMaResult oracle_best_ma(const ClusterSpec& spec, const SystemParams& params,
                            const GridSpec& grid) {
    BestMaResult r;
    r.noma = oracle_solve(spec, MaScheme::NOMA, params, grid);
    r.oma = oracle_solve(spec, MaScheme::OMA, params, grid);
    // Grid maxima are each uncertain by their own cell gap; differences
    // inside the combined gap are ties.
    const double margin = r.noma.cell_gap_bound + r.oma.cell_gap_bound;
    if (r.noma.objective > r.oma.objective + margin) {
        r.scheme = MaScheme::NOMA;
        r.objective = r.noma.objective;
    } else {
        r.scheme = MaScheme::OMA;
        r.objective = r.oma.objective;
    }
    return r;
}

ClusterSpec random_cluster_spec(SubproblemKind kind, Rng& rng, double p1_max_mw,
                                double p2_max_mw) {
    double g1 = rng.uniform(0.1, 100.0);
    double g2 = rng.uniform(0.1, 100.0);
    if (g1 > g2) std::swap(g1, g2);

    ClusterSpec spec;
    spec.gamma1 = g1;
    spec.gamma2 = g2;
    spec.w1 = rng.uniform(0.05, 0.95);
    spec.p1_max_mw = p1_max_mw;
    spec.p2_max_mw = p2_max_mw;
    switch (kind) {
        case SubproblemKind::SS:
            spec.class1 = UserClass::EMBB;
            spec.class2 = UserClass::EMBB;
            break;
        case SubproblemKind::ES:
            spec.class1 = UserClass::IoT;
            spec.class2 = UserClass::EMBB;
            break;
        case SubproblemKind::SE:
            spec.class1 = UserClass::EMBB;
            spec.class2 = UserClass::IoT;
            break;
        case SubproblemKind::EE:
            spec.class1 = UserClass::IoT;
            spec.class2 = UserClass::IoT;
            break;
    }
    return spec;
}

}  // namespace nomopt
