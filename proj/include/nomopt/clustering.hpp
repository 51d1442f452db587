// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "nomopt/model.hpp"

namespace nomopt {

/// One user known to the clustering stage.
struct UserRecord {
    int id = 0;
    UserClass cls = UserClass::EMBB;
    double gain = 1.0;  ///< normalized channel gain (1/mW)
};

/// How a pair's MA scheme is chosen at evaluation time.
enum class PairPolicy { Adaptive, ForceNOMA, ForceOMA };

const char* to_string(PairPolicy p) noexcept;

/// A two-user cluster within a plan; weak.gain <= strong.gain always.
struct PairAssignment {
    UserRecord weak;
    UserRecord strong;
    SubproblemKind kind = SubproblemKind::SS;
    PairPolicy policy = PairPolicy::Adaptive;
};

/// Partition of all users into two-user clusters and OMA solos.
struct ClusterPlan {
    std::vector<PairAssignment> pairs;
    std::vector<UserRecord> solos;  ///< always served in OMA
};

/// Kind implied by the (weak, strong) classes.
SubproblemKind kind_of_pair(UserClass weak, UserClass strong) noexcept;

/// Largest l such that the l-th weakest IoT gain is strictly below the
/// l-th strongest eMBB gain; 0 when no l qualifies. Both inputs must be
/// sorted descending (1-based indexing in the definition).
int compute_l_star(const std::vector<double>& iot_gains_desc,
                   const std::vector<double>& embb_gains_desc);

/// The proposed pairing: weak-IoT/strong-eMBB pairs first, then
/// weak-eMBB/strong-IoT pairs, then adjacent pairing of whichever class
/// is left over (all-eMBB pairs stay adaptive; all-IoT pairs are forced
/// to OMA). An odd leftover user goes solo.
ClusterPlan build_proposed_plan(std::vector<UserRecord> iot,
                                std::vector<UserRecord> embb);

/// Uniform random perfect matching (seeded); an odd user goes solo.
ClusterPlan build_random_plan(std::vector<UserRecord> users, std::uint64_t rng_seed);

/// Pairs the strongest user with the weakest, second strongest with
/// second weakest, and so on; the middle user of an odd set goes solo.
ClusterPlan build_strongest_weakest_plan(std::vector<UserRecord> users);

/// Checks that a plan covers exactly the given users and that every
/// pair's weak/strong roles respect the gains. Throws on violation.
void validate_plan(const ClusterPlan& plan, const std::vector<UserRecord>& users);

}  // namespace nomopt
