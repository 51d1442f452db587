// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nomopt/clustering.hpp"
#include "nomopt/model.hpp"

namespace nomopt {

/// Link-budget constants of the cell.
struct ChannelParams {
    double g0_db = -70.0;        ///< composite gain constant (dB)
    double n_exp = 2.0;          ///< path-loss exponent
    double n0_dbm_hz = -170.0;   ///< noise power spectral density
    double nf_db = 10.0;         ///< noise figure (dB)
    double bandwidth_hz = 1.0e5; ///< per-user bandwidth

    void validate() const;
};

struct CellGeometry {
    double r_inner_m = 10.0;
    double r_outer_m = 100.0;

    void validate() const;
};

/// A user placed in the cell.
struct ScenarioUser {
    int id = 0;
    UserClass cls = UserClass::EMBB;
    double distance_m = 0.0;
    double gain = 0.0;  ///< normalized gain (1/mW)

    [[nodiscard]] UserRecord record() const { return {id, cls, gain}; }
};

struct Scenario {
    std::vector<ScenarioUser> users;

    [[nodiscard]] std::vector<UserRecord> records() const;
    [[nodiscard]] std::vector<UserRecord> records(UserClass cls) const;
};

/// Normalized gain (1/mW) at distance d: path loss -g0 + 10*n*log10(d)
/// in dB over the receiver noise power B*(N0+Nf).
double gain_from_distance(double distance_m, const ChannelParams& cp);

/// The fixed 10-user layout with d_k = 10*(11-k) m and gain 10000/d_k^2,
/// k = 1..10 (ids carry k). All users start as eMBB; callers assign
/// classes per experiment.
Scenario deterministic_scenario();

/// Users dropped uniformly over the annulus area (radius pdf ~ d);
/// IoT users first, then eMBB, ids 1..n. Seeded and reproducible.
Scenario random_scenario(int n_iot, int n_embb, const CellGeometry& geom,
                         const ChannelParams& cp, std::uint64_t rng_seed);

/// JSON document round-trip for reproducible fixtures.
std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& text);

}  // namespace nomopt
