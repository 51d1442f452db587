// SPDX-License-Identifier: Apache-2.0
#include "nomopt/model.hpp"

#include <cmath>

namespace nomopt {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double log2_1p(double x) { return std::log2(1.0 + x); }

}  // namespace

const char* to_string(UserClass c) noexcept {
    return c == UserClass::IoT ? "IoT" : "eMBB";
}

const char* to_string(MaScheme s) noexcept {
    return s == MaScheme::NOMA ? "NOMA" : "OMA";
}

const char* to_string(SubproblemKind k) noexcept {
    switch (k) {
        case SubproblemKind::SS: return "SS";
        case SubproblemKind::ES: return "ES";
        case SubproblemKind::SE: return "SE";
        case SubproblemKind::EE: return "EE";
    }
    return "?";
}

UserClass user_class_from_string(const std::string& s) {
    if (s == "IoT" || s == "iot") return UserClass::IoT;
    if (s == "eMBB" || s == "embb" || s == "eMbb") return UserClass::EMBB;
    throw std::invalid_argument("unknown user class: " + s);
}

MaScheme ma_scheme_from_string(const std::string& s) {
    if (s == "NOMA" || s == "noma") return MaScheme::NOMA;
    if (s == "OMA" || s == "oma") return MaScheme::OMA;
    throw std::invalid_argument("unknown MA scheme: " + s);
}

SubproblemKind subproblem_kind_from_string(const std::string& s) {
    if (s == "SS" || s == "ss") return SubproblemKind::SS;
    if (s == "ES" || s == "es") return SubproblemKind::ES;
    if (s == "SE" || s == "se") return SubproblemKind::SE;
    if (s == "EE" || s == "ee") return SubproblemKind::EE;
    throw std::invalid_argument("unknown subproblem kind: " + s);
}

void SystemParams::validate() const {
    require(phi > 0.0, "phi must be > 0");
    require(circuit_power_mw > 0.0, "circuit power must be > 0");
    require(k_s > 0.0, "k_s must be > 0");
    require(k_e > 0.0, "k_e must be > 0");
    require(bandwidth_hz > 0.0, "bandwidth must be > 0");
}

void ClusterSpec::validate() const {
    require(gamma1 > 0.0 && std::isfinite(gamma1), "gamma1 must be positive and finite");
    require(gamma2 > 0.0 && std::isfinite(gamma2), "gamma2 must be positive and finite");
    require(gamma1 <= gamma2, "gamma1 must not exceed gamma2 (user 1 is the weak user)");
    require(w1 >= 0.0 && w1 <= 1.0, "w1 must lie in [0, 1]");
    require(p1_max_mw > 0.0, "p1_max must be > 0");
    require(p2_max_mw > 0.0, "p2_max must be > 0");
}

SubproblemKind ClusterSpec::kind() const noexcept {
    if (class1 == UserClass::EMBB)
        return class2 == UserClass::EMBB ? SubproblemKind::SS : SubproblemKind::SE;
    return class2 == UserClass::EMBB ? SubproblemKind::ES : SubproblemKind::EE;
}

double se_oma(double gamma, double p_mw) {
    require(gamma > 0.0, "gamma must be > 0");
    require(p_mw >= 0.0, "power must be >= 0");
    return log2_1p(gamma * p_mw);
}

double se_noma_weak(double gamma1, double p1_mw) {
    require(gamma1 > 0.0, "gamma1 must be > 0");
    require(p1_mw >= 0.0, "power must be >= 0");
    return 2.0 * log2_1p(gamma1 * p1_mw);
}

double se_noma_strong(double gamma1, double p1_mw, double gamma2, double p2_mw) {
    require(gamma1 > 0.0 && gamma2 > 0.0, "gains must be > 0");
    require(p1_mw >= 0.0 && p2_mw >= 0.0, "powers must be >= 0");
    return 2.0 * log2_1p(gamma2 * p2_mw / (1.0 + gamma1 * p1_mw));
}

double ee_oma(double gamma, double p_mw, const SystemParams& params) {
    return se_oma(gamma, p_mw) / (params.phi * p_mw + params.circuit_power_mw);
}

double ee_noma_weak(double gamma1, double p1_mw, const SystemParams& params) {
    return se_noma_weak(gamma1, p1_mw) /
           (2.0 * (params.phi * p1_mw + params.circuit_power_mw));
}

double ee_noma_strong(double gamma1, double p1_mw, double gamma2, double p2_mw,
                      const SystemParams& params) {
    return se_noma_strong(gamma1, p1_mw, gamma2, p2_mw) /
           (2.0 * (params.phi * p2_mw + params.circuit_power_mw));
}

double ee_noma(int user_index, double gamma1, double p1_mw, double gamma2,
               double p2_mw, const SystemParams& params) {
    require(user_index == 1 || user_index == 2, "user index must be 1 or 2");
    return user_index == 1 ? ee_noma_weak(gamma1, p1_mw, params)
                           : ee_noma_strong(gamma1, p1_mw, gamma2, p2_mw, params);
}

namespace {

double metric(UserClass cls, int user_index, const ClusterSpec& spec,
              const PowerAllocation& alloc, const SystemParams& params) {
    const bool weak = user_index == 1;
    if (alloc.scheme == MaScheme::NOMA) {
        if (cls == UserClass::EMBB)
            return weak ? se_noma_weak(spec.gamma1, alloc.p1_mw)
                        : se_noma_strong(spec.gamma1, alloc.p1_mw, spec.gamma2,
                                         alloc.p2_mw);
        return weak ? ee_noma_weak(spec.gamma1, alloc.p1_mw, params)
                    : ee_noma_strong(spec.gamma1, alloc.p1_mw, spec.gamma2,
                                     alloc.p2_mw, params);
    }
    const double gamma = weak ? spec.gamma1 : spec.gamma2;
    const double p = weak ? alloc.p1_mw : alloc.p2_mw;
    return cls == UserClass::EMBB ? se_oma(gamma, p) : ee_oma(gamma, p, params);
}

}  // namespace

std::array<double, 2> weighted_terms(const ClusterSpec& spec,
                                     const PowerAllocation& alloc,
                                     const SystemParams& params) {
    const double k1 = spec.class1 == UserClass::EMBB ? params.k_s : params.k_e;
    const double k2 = spec.class2 == UserClass::EMBB ? params.k_s : params.k_e;
    return {spec.w1 / k1 * metric(spec.class1, 1, spec, alloc, params),
            spec.w2() / k2 * metric(spec.class2, 2, spec, alloc, params)};
}

double weighted_objective(const ClusterSpec& spec, const PowerAllocation& alloc,
                          const SystemParams& params) {
    spec.validate();
    params.validate();
    constexpr double slack = 1e-9;
    require(alloc.p1_mw >= 0.0 && alloc.p1_mw <= spec.budget1(alloc.scheme) + slack,
            "p1 outside scheme budget");
    require(alloc.p2_mw >= 0.0 && alloc.p2_mw <= spec.budget2(alloc.scheme) + slack,
            "p2 outside scheme budget");
    const auto terms = weighted_terms(spec, alloc, params);
    return terms[0] + terms[1];
}

}  // namespace nomopt
