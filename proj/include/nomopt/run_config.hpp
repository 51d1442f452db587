// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "nomopt/experiments.hpp"
#include "nomopt/model.hpp"
#include "nomopt/numeric.hpp"
#include "nomopt/scenario.hpp"

namespace nomopt {

/// Everything the CLI needs, loadable from a JSON file. Defaults follow
/// the reference parameter set: phi = 2, Q = 10 mW, P = 10 mW, B = 100
/// kHz, N0 = -170 dBm/Hz, Nf = 10 dB, G0 = -70 dB, n = 2, cell radii
/// 10/100 m, K_S = 30, K_E = 1.
struct RunConfig {
    SystemParams sys;
    ChannelParams chan;
    CellGeometry geom;
    SolverConfig solver;
    double p_max_mw = 10.0;
    double w1 = 0.5;
    int drops = 50;
    std::uint64_t seed = 1;

    void validate() const;

    [[nodiscard]] SweepContext sweep_context() const {
        return {sys, chan, geom, solver, p_max_mw, drops, seed};
    }
};

/// Parses a config document. Unknown keys are rejected so typos fail
/// loudly; missing keys keep their defaults.
RunConfig run_config_from_json(const std::string& text);

RunConfig load_run_config(const std::string& path);

/// The full key set with current values, for --dump-config.
std::string run_config_to_json(const RunConfig& config);

}  // namespace nomopt
