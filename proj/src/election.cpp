#include "injectsim/election.hpp"

#include <algorithm>
#include <cmath>

namespace injectsim {

bool ScoreWeights::valid() const {
    if (power < 0 || dwell < 0 || cluster < 0 || load < 0 || equipment < 0) return false;
    return std::abs(power + dwell + cluster + load + equipment - 1.0) <= 1e-9;
}

std::optional<DeviceScore> score_device(const Device& device, const Clique& clique,
                                        const AdHocTopology& topology, const ScoreWeights& weights,
                                        double horizon_s, SimTime now) {
    if (!device.eligible(now) || !clique.has_member(device.id)) return std::nullopt;

    DeviceScore s;
    s.device = device.id;
    s.power_term = device.battery;
    if (device.expected_departure) {
        const double remaining = (*device.expected_departure - now).seconds();
        s.dwell_term = std::clamp(remaining / horizon_s, 0.0, 1.0);
    } else {
        s.dwell_term = 1.0;
    }
    s.cluster_term = topology.clustering_coefficient(device.id);
    s.load_term = 1.0 / (1.0 + device.load);
    s.equipment_term = device.equipment_score;
    s.total = weights.power * s.power_term + weights.dwell * s.dwell_term +
              weights.cluster * s.cluster_term + weights.load * s.load_term +
              weights.equipment * s.equipment_term;
    return s;
}

namespace {

std::optional<DeviceScore> best_member(const Clique& clique, const std::vector<Device>& devices,
                                       const AdHocTopology& topology, const ScoreWeights& weights,
                                       double horizon_s, SimTime now,
                                       std::optional<DeviceId> skip = std::nullopt) {
    std::optional<DeviceScore> best;
    for (DeviceId m : clique.members) {  // ascending, so ties keep the lowest id
        if (skip && m == *skip) continue;
        const Device* d = find_device(devices, m);
        if (!d) continue;
        auto s = score_device(*d, clique, topology, weights, horizon_s, now);
        if (s && (!best || s->total > best->total)) best = s;
    }
    return best;
}

}  // namespace

std::optional<ElectionResult> elect_injection_point(Clique& clique,
                                                    const std::vector<Device>& devices,
                                                    const AdHocTopology& topology,
                                                    const ScoreWeights& weights, double horizon_s,
                                                    SimTime now) {
    auto best = best_member(clique, devices, topology, weights, horizon_s, now);
    if (!best) return std::nullopt;
    clique.injection_point = best->device;
    ElectionResult r;
    r.winner = *best;
    r.adhoc_messages = 2 * (static_cast<int>(clique.members.size()) - 1);
    return r;
}

MaintenanceResult maintain_injection_point(Clique& clique, const std::vector<Device>& devices,
                                           const AdHocTopology& topology,
                                           const ScoreWeights& weights, double horizon_s,
                                           double hysteresis, SimTime now) {
    MaintenanceResult r;
    const Device* incumbent =
        clique.injection_point ? find_device(devices, *clique.injection_point) : nullptr;
    const bool incumbent_ok = incumbent && incumbent->present(now) &&
                              clique.has_member(incumbent->id);

    if (!incumbent_ok) {
        clique.injection_point.reset();
        r.election = elect_injection_point(clique, devices, topology, weights, horizon_s, now);
        r.action = r.election ? MaintenanceResult::Action::Reelected
                              : MaintenanceResult::Action::NoEligible;
        return r;
    }

    r.incumbent_score = score_device(*incumbent, clique, topology, weights, horizon_s, now);
    auto challenger =
        best_member(clique, devices, topology, weights, horizon_s, now, incumbent->id);
    if (r.incumbent_score && challenger &&
        challenger->total > r.incumbent_score->total * (1.0 + hysteresis)) {
        clique.injection_point = challenger->device;
        ElectionResult e;
        e.winner = *challenger;
        e.adhoc_messages = 2 * (static_cast<int>(clique.members.size()) - 1);
        r.election = e;
        r.action = MaintenanceResult::Action::Handover;
        return r;
    }
    r.action = MaintenanceResult::Action::Keep;
    return r;
}

MultiInjectionPlan plan_multi_injection(std::vector<Clique>& cliques,
                                        const std::vector<Device>& devices,
                                        const AdHocTopology& topology,
                                        const std::map<DeviceId, std::set<std::string>>& interests,
                                        const ScoreWeights& weights, double horizon_s,
                                        SimTime now) {
    MultiInjectionPlan plan;
    for (Clique& c : cliques) {
        // item -> interested members of this clique
        std::map<std::string, std::vector<DeviceId>> by_item;
        for (DeviceId m : c.members) {
            auto it = interests.find(m);
            if (it == interests.end()) continue;
            for (const std::string& item : it->second) by_item[item].push_back(m);
        }
        if (by_item.empty()) continue;

        std::optional<DeviceId> ip = c.injection_point;
        if (!ip) {
            auto elected = elect_injection_point(c, devices, topology, weights, horizon_s, now);
            if (elected) ip = elected->winner.device;
        }
        if (!ip) {
            plan.uncovered.push_back(c.id);
            continue;
        }

        // merge items whose member sets coincide: one group per profile
        std::map<std::vector<DeviceId>, InterestGroup> merged;
        for (auto& [item, members] : by_item) {
            auto& g = merged[members];
            g.clique = c.id;
            g.members = members;
            g.item_ids.insert(item);
        }
        MultiInjectionPlan::Assignment a;
        a.clique = c.id;
        a.injection_point = *ip;
        for (auto& [_, g] : merged) a.groups.push_back(g);
        plan.assignments.push_back(std::move(a));
    }
    return plan;
}

}  // namespace injectsim
