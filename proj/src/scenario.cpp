// SPDX-License-Identifier: Apache-2.0
#include "nomopt/scenario.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "nomopt/rng.hpp"

namespace nomopt {

void ChannelParams::validate() const {
    if (n_exp <= 0.0) throw std::invalid_argument("path-loss exponent must be > 0");
    if (bandwidth_hz <= 0.0) throw std::invalid_argument("bandwidth must be > 0");
}

void CellGeometry::validate() const {
    if (!(0.0 < r_inner_m && r_inner_m < r_outer_m))
        throw std::invalid_argument("cell radii must satisfy 0 < inner < outer");
}

std::vector<UserRecord> Scenario::records() const {
    std::vector<UserRecord> out;
    out.reserve(users.size());
    for (const auto& u : users) out.push_back(u.record());
    return out;
}

std::vector<UserRecord> Scenario::records(UserClass cls) const {
    std::vector<UserRecord> out;
    for (const auto& u : users)
        if (u.cls == cls) out.push_back(u.record());
    return out;
}

double gain_from_distance(double distance_m, const ChannelParams& cp) {
    cp.validate();
    if (distance_m <= 0.0)
        throw std::invalid_argument("gain_from_distance: distance must be > 0");
    const double path_loss_db = -cp.g0_db + 10.0 * cp.n_exp * std::log10(distance_m);
    const double noise_dbm =
        cp.n0_dbm_hz + cp.nf_db + 10.0 * std::log10(cp.bandwidth_hz);
    return std::pow(10.0, -path_loss_db / 10.0) / std::pow(10.0, noise_dbm / 10.0);
}

Scenario deterministic_scenario() {
    Scenario s;
    for (int k = 1; k <= 10; ++k) {
        const double d = 10.0 * (11 - k);
        s.users.push_back({k, UserClass::EMBB, d, 10000.0 / (d * d)});
    }
    return s;
}

Scenario random_scenario(int n_iot, int n_embb, const CellGeometry& geom,
                         const ChannelParams& cp, std::uint64_t rng_seed) {
    if (n_iot < 0 || n_embb < 0)
        throw std::invalid_argument("random_scenario: counts must be >= 0");
    geom.validate();
    cp.validate();

    Rng rng(rng_seed);
    const double r2_in = geom.r_inner_m * geom.r_inner_m;
    const double r2_out = geom.r_outer_m * geom.r_outer_m;
    auto draw_distance = [&] {
        return std::sqrt(r2_in + rng.next_double() * (r2_out - r2_in));
    };

    Scenario s;
    int id = 1;
    for (int i = 0; i < n_iot; ++i, ++id) {
        const double d = draw_distance();
        s.users.push_back({id, UserClass::IoT, d, gain_from_distance(d, cp)});
    }
    for (int i = 0; i < n_embb; ++i, ++id) {
        const double d = draw_distance();
        s.users.push_back({id, UserClass::EMBB, d, gain_from_distance(d, cp)});
    }
    return s;
}

std::string scenario_to_json(const Scenario& s) {
    nlohmann::json doc;
    doc["users"] = nlohmann::json::array();
    for (const auto& u : s.users)
        doc["users"].push_back({{"id", u.id},
                                {"class", to_string(u.cls)},
                                {"distance_m", u.distance_m},
                                {"gain_per_mw", u.gain}});
    return doc.dump(2);
}

Scenario scenario_from_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    Scenario s;
    std::set<int> ids;
    for (const auto& ju : doc.at("users")) {
        ScenarioUser u;
        u.id = ju.at("id").get<int>();
        u.cls = user_class_from_string(ju.at("class").get<std::string>());
        u.distance_m = ju.value("distance_m", 0.0);
        u.gain = ju.at("gain_per_mw").get<double>();
        if (u.gain <= 0.0 || !std::isfinite(u.gain))
            throw std::invalid_argument("scenario user gain must be positive");
        if (!ids.insert(u.id).second)
            throw std::invalid_argument("duplicate scenario user id");
        s.users.push_back(u);
    }
    return s;
}

}  // namespace nomopt
