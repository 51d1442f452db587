// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nomopt {

/// Traffic class of a user. IoT users are scored by energy efficiency,
/// eMBB users by spectral efficiency.
enum class UserClass { IoT, EMBB };

/// Multiple-access scheme for a cluster. Under OMA each user is active
/// every other slot, so its per-slot power budget doubles.
enum class MaScheme { NOMA, OMA };

/// Which weighted-sum subproblem a cluster solves, keyed by
/// (weak-user metric, strong-user metric): S = spectral, E = energy.
enum class SubproblemKind { SS, ES, SE, EE };

const char* to_string(UserClass c) noexcept;
const char* to_string(MaScheme s) noexcept;
const char* to_string(SubproblemKind k) noexcept;

UserClass user_class_from_string(const std::string& s);
MaScheme ma_scheme_from_string(const std::string& s);
SubproblemKind subproblem_kind_from_string(const std::string& s);

/// System-wide constants of the objective model.
struct SystemParams {
    double phi = 2.0;               ///< inverse amplifier efficiency
    double circuit_power_mw = 10.0; ///< circuit power Q (mW)
    double k_s = 30.0;              ///< normalization divisor for SE terms
    double k_e = 1.0;               ///< normalization divisor for EE terms
    double bandwidth_hz = 1.0e5;    ///< reporting bandwidth (Hz)

    void validate() const;
};

/// One two-user cluster: ordered normalized gains (gamma1 <= gamma2),
/// user classes, weak-user weight and per-user NOMA power budgets.
struct ClusterSpec {
    double gamma1 = 1.0;  ///< weak-user gain over noise (1/mW)
    double gamma2 = 1.0;  ///< strong-user gain over noise (1/mW)
    UserClass class1 = UserClass::EMBB;
    UserClass class2 = UserClass::EMBB;
    double w1 = 0.5;           ///< weak-user weight; w2 = 1 - w1 is implied
    double p1_max_mw = 10.0;   ///< NOMA budget of user 1 (mW)
    double p2_max_mw = 10.0;   ///< NOMA budget of user 2 (mW)

    void validate() const;

    [[nodiscard]] SubproblemKind kind() const noexcept;
    [[nodiscard]] double w2() const noexcept { return 1.0 - w1; }

    /// Per-user budget under the given scheme (doubled in OMA).
    [[nodiscard]] double budget1(MaScheme s) const noexcept {
        return s == MaScheme::OMA ? 2.0 * p1_max_mw : p1_max_mw;
    }
    [[nodiscard]] double budget2(MaScheme s) const noexcept {
        return s == MaScheme::OMA ? 2.0 * p2_max_mw : p2_max_mw;
    }
};

/// Transmit powers of both users together with the scheme they assume.
struct PowerAllocation {
    double p1_mw = 0.0;
    double p2_mw = 0.0;
    MaScheme scheme = MaScheme::OMA;
};

// Spectral efficiency (bits/s/Hz). log is log2 throughout.

/// OMA spectral efficiency log2(1 + gamma * p).
double se_oma(double gamma, double p_mw);

/// NOMA weak-user spectral efficiency 2*log2(1 + gamma1 * p1). The weak
/// user is decoded last and sees no interference.
double se_noma_weak(double gamma1, double p1_mw);

/// NOMA strong-user spectral efficiency
/// 2*log2(1 + gamma2*p2 / (1 + gamma1*p1)); decoded first, so the weak
/// user's signal acts as interference.
double se_noma_strong(double gamma1, double p1_mw, double gamma2, double p2_mw);

// Energy efficiency (bits/J/Hz with powers in mW): SE over consumed
// power phi*p + Q. NOMA pairs occupy both slots, hence the doubled
// denominator.

double ee_oma(double gamma, double p_mw, const SystemParams& params);
double ee_noma_weak(double gamma1, double p1_mw, const SystemParams& params);
double ee_noma_strong(double gamma1, double p1_mw, double gamma2, double p2_mw,
                      const SystemParams& params);

/// Dispatch on user index (1 = weak, 2 = strong).
double ee_noma(int user_index, double gamma1, double p1_mw, double gamma2,
               double p2_mw, const SystemParams& params);

/// The two weighted, normalized metric terms of the cluster objective:
/// term[i] = (w_i / K_metric) * M_i under alloc.scheme. Their sum is the
/// scalarized objective.
std::array<double, 2> weighted_terms(const ClusterSpec& spec,
                                     const PowerAllocation& alloc,
                                     const SystemParams& params);

/// Scalarized cluster objective (w1/K_m1)*M1 + (w2/K_m2)*M2. Rejects
/// allocations outside the scheme's budgets.
double weighted_objective(const ClusterSpec& spec, const PowerAllocation& alloc,
                          const SystemParams& params);

}  // namespace nomopt
