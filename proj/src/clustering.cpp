// SPDX-License-Identifier: Apache-2.0
#include "nomopt/clustering.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nomopt/rng.hpp"

namespace nomopt {

const char* to_string(PairPolicy p) noexcept {
    switch (p) {
        case PairPolicy::Adaptive: return "Adaptive";
        case PairPolicy::ForceNOMA: return "ForceNOMA";
        case PairPolicy::ForceOMA: return "ForceOMA";
    }
    return "?";
}

SubproblemKind kind_of_pair(UserClass weak, UserClass strong) noexcept {
    if (weak == UserClass::EMBB)
        return strong == UserClass::EMBB ? SubproblemKind::SS : SubproblemKind::SE;
    return strong == UserClass::EMBB ? SubproblemKind::ES : SubproblemKind::EE;
}

namespace {

void require_sorted_desc(const std::vector<double>& gains, const char* name) {
    for (double g : gains)
        if (!(g > 0.0)) throw std::invalid_argument(std::string(name) + ": gains must be positive");
    for (std::size_t i = 1; i < gains.size(); ++i)
        if (gains[i] > gains[i - 1])
            throw std::invalid_argument(std::string(name) + ": gains must be sorted descending");
}

void sort_desc(std::vector<UserRecord>& users) {
    std::stable_sort(users.begin(), users.end(),
                     [](const UserRecord& a, const UserRecord& b) { return a.gain > b.gain; });
}

PairAssignment make_pair(UserRecord weak, UserRecord strong, PairPolicy policy) {
    if (weak.gain > strong.gain) std::swap(weak, strong);
    return {weak, strong, kind_of_pair(weak.cls, strong.cls), policy};
}

/// Pairs (1st,2nd), (3rd,4th), ... of a descending-gain run; the odd one
/// out goes solo.
void pair_adjacent(const std::vector<UserRecord>& run, PairPolicy policy,
                   ClusterPlan& plan) {
    std::size_t i = 0;
    for (; i + 1 < run.size(); i += 2)
        plan.pairs.push_back(make_pair(run[i + 1], run[i], policy));
    if (i < run.size()) plan.solos.push_back(run[i]);
}

}  // namespace

int compute_l_star(const std::vector<double>& iot_gains_desc,
                   const std::vector<double>& embb_gains_desc) {
    require_sorted_desc(iot_gains_desc, "compute_l_star(iot)");
    require_sorted_desc(embb_gains_desc, "compute_l_star(embb)");
    const int n_iot = static_cast<int>(iot_gains_desc.size());
    const int m = std::min(n_iot, static_cast<int>(embb_gains_desc.size()));
    int l_star = 0;
    for (int l = 1; l <= m; ++l) {
        // 1-based: g_(n_iot + 1 - l) < h_l
        if (iot_gains_desc[static_cast<std::size_t>(n_iot - l)] <
            embb_gains_desc[static_cast<std::size_t>(l - 1)])
            l_star = l;
        else
            break;  // the condition is monotone in l
    }
    return l_star;
}

ClusterPlan build_proposed_plan(std::vector<UserRecord> iot,
                                std::vector<UserRecord> embb) {
    if (iot.empty() && embb.empty())
        throw std::invalid_argument("build_proposed_plan: no users");
    for (const auto& u : iot)
        if (u.cls != UserClass::IoT)
            throw std::invalid_argument("build_proposed_plan: non-IoT user in iot list");
    for (const auto& u : embb)
        if (u.cls != UserClass::EMBB)
            throw std::invalid_argument("build_proposed_plan: non-eMBB user in embb list");

    sort_desc(iot);
    sort_desc(embb);
    const int n_iot = static_cast<int>(iot.size());
    const int n_embb = static_cast<int>(embb.size());
    const int m = std::min(n_iot, n_embb);

    std::vector<double> g(iot.size()), h(embb.size());
    for (std::size_t i = 0; i < iot.size(); ++i) g[i] = iot[i].gain;
    for (std::size_t i = 0; i < embb.size(); ++i) h[i] = embb[i].gain;
    const int l_star = compute_l_star(g, h);

    ClusterPlan plan;
    // Weak IoT with strong eMBB: (h_l, g_{n_iot+1-l}) for l = 1..l*.
    for (int l = 1; l <= l_star; ++l)
        plan.pairs.push_back(make_pair(iot[static_cast<std::size_t>(n_iot - l)],
                                       embb[static_cast<std::size_t>(l - 1)],
                                       PairPolicy::Adaptive));
    // Weak eMBB with strong IoT: (h_{n_embb+1-j}, g_j) for j = 1..m-l*.
    for (int j = 1; j <= m - l_star; ++j)
        plan.pairs.push_back(make_pair(embb[static_cast<std::size_t>(n_embb - j)],
                                       iot[static_cast<std::size_t>(j - 1)],
                                       PairPolicy::Adaptive));

    if (m == n_iot) {
        // Leftover eMBB h_{l*+1} .. h_{n_embb-(m-l*)}, adjacent by
        // descending gain.
        std::vector<UserRecord> rest(embb.begin() + l_star,
                                     embb.begin() + (n_embb - (m - l_star)));
        pair_adjacent(rest, PairPolicy::Adaptive, plan);
    } else {
        // m == n_embb: leftover IoT g_{m-l*+1} .. g_{n_iot-l*}; all-IoT
        // pairs are forced to OMA.
        std::vector<UserRecord> rest(iot.begin() + (m - l_star),
                                     iot.begin() + (n_iot - l_star));
        pair_adjacent(rest, PairPolicy::ForceOMA, plan);
    }
    return plan;
}

ClusterPlan build_random_plan(std::vector<UserRecord> users, std::uint64_t rng_seed) {
    if (users.empty()) throw std::invalid_argument("build_random_plan: no users");
    Rng rng(rng_seed);
    rng.shuffle(users);
    ClusterPlan plan;
    std::size_t i = 0;
    for (; i + 1 < users.size(); i += 2)
        plan.pairs.push_back(make_pair(users[i], users[i + 1], PairPolicy::Adaptive));
    if (i < users.size()) plan.solos.push_back(users[i]);
    return plan;
}

ClusterPlan build_strongest_weakest_plan(std::vector<UserRecord> users) {
    if (users.size() < 2)
        throw std::invalid_argument("build_strongest_weakest_plan: need >= 2 users");
    sort_desc(users);  // rank 1 = strongest
    ClusterPlan plan;
    const std::size_t n = users.size();
    for (std::size_t k = 0; k < n / 2; ++k)
        plan.pairs.push_back(make_pair(users[n - 1 - k], users[k], PairPolicy::Adaptive));
    if (n % 2 == 1) plan.solos.push_back(users[n / 2]);
    return plan;
}

void validate_plan(const ClusterPlan& plan, const std::vector<UserRecord>& users) {
    std::multiset<int> expected, seen;
    for (const auto& u : users) expected.insert(u.id);
    for (const auto& p : plan.pairs) {
        seen.insert(p.weak.id);
        seen.insert(p.strong.id);
        if (p.weak.gain > p.strong.gain)
            throw std::logic_error("plan pair violates weak <= strong gain order");
        if (p.kind != kind_of_pair(p.weak.cls, p.strong.cls))
            throw std::logic_error("plan pair kind does not match classes");
    }
    for (const auto& u : plan.solos) seen.insert(u.id);
    if (expected != seen)
        throw std::logic_error("plan does not partition the input users");
}

}  // namespace nomopt
