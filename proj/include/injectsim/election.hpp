#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "injectsim/topology.hpp"

namespace injectsim {

struct ScoreWeights {
    double power = 0.30;
    double dwell = 0.25;
    double cluster = 0.20;
    double load = 0.15;
    double equipment = 0.10;

    /// Non-negative and summing to 1 within 1e-9.
    bool valid() const;

    bool operator==(const ScoreWeights&) const = default;
};

struct DeviceScore {
    DeviceId device;
    double power_term = 0;
    double dwell_term = 0;
    double cluster_term = 0;
    double load_term = 0;
    double equipment_term = 0;
    double total = 0;
};

/// Scores one eligible clique member. power = battery; dwell = remaining
/// availability normalized by the horizon (1 when no departure is known);
/// cluster = local clustering coefficient; load = 1/(1+load);
/// equipment = the scenario-declared equipment score.
/// Returns nullopt when the device is dead or not backbone-capable.
std::optional<DeviceScore> score_device(const Device& device, const Clique& clique,
                                        const AdHocTopology& topology, const ScoreWeights& weights,
                                        double horizon_s, SimTime now);

struct ElectionResult {
    DeviceScore winner;
    int adhoc_messages = 0;  // probe + reply per other member
};

/// Picks the eligible member with the highest total score, ties to the lowest
/// id, and records it on the clique. Returns nullopt when nobody is eligible.
std::optional<ElectionResult> elect_injection_point(Clique& clique,
                                                    const std::vector<Device>& devices,
                                                    const AdHocTopology& topology,
                                                    const ScoreWeights& weights, double horizon_s,
                                                    SimTime now);

struct MaintenanceResult {
    enum class Action { Keep, Reelected, Handover, NoEligible };
    Action action = Action::Keep;
    std::optional<DeviceScore> incumbent_score;
    std::optional<ElectionResult> election;  // set for Reelected / Handover
};

/// Re-elects immediately when the incumbent left or died; otherwise hands
/// over only when the best challenger beats incumbent * (1 + hysteresis).
/// Keeping the incumbent costs no messages.
MaintenanceResult maintain_injection_point(Clique& clique, const std::vector<Device>& devices,
                                           const AdHocTopology& topology,
                                           const ScoreWeights& weights, double horizon_s,
                                           double hysteresis, SimTime now);

struct InterestGroup {
    CliqueId clique;
    std::vector<DeviceId> members;        // sorted
    std::set<std::string> item_ids;       // every member wants every item
};

struct MultiInjectionPlan {
    struct Assignment {
        CliqueId clique;
        DeviceId injection_point;
        std::vector<InterestGroup> groups;
    };
    std::vector<Assignment> assignments;   // by clique id
    std::vector<CliqueId> uncovered;       // cliques with interest but nobody eligible
};

/// One injection point per clique serves all its interest groups; groups with
/// identical member sets merge. Partitions without an eligible device are
/// reported uncovered.
MultiInjectionPlan plan_multi_injection(
    std::vector<Clique>& cliques, const std::vector<Device>& devices,
    const AdHocTopology& topology, const std::map<DeviceId, std::set<std::string>>& interests,
    const ScoreWeights& weights, double horizon_s, SimTime now);

}  // namespace injectsim
