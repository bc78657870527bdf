#include "injectsim/consistency.hpp"

#include <algorithm>
#include <limits>

namespace injectsim {

const char* to_string(Priority p) {
    switch (p) {
        case Priority::Low: return "low";
        case Priority::Normal: return "normal";
        case Priority::High: return "high";
    }
    return "?";
}

const char* to_string(Scope s) {
    return s == Scope::CliqueLocal ? "clique_local" : "global";
}

double age_of(const ItemReplica& replica, SimTime now) {
    return (now - replica.produced_at).seconds();
}

std::vector<Injury> check_requirements(const std::vector<ConsistencyRequirement>& requirements,
                                       const ReplicaTable& replicas, SimTime now) {
    std::vector<Injury> injured;
    for (const ConsistencyRequirement& req : requirements) {
        const ItemReplica* held = nullptr;
        if (auto by = replicas.find(req.seeker); by != replicas.end()) {
            if (auto it = by->second.find(req.item_id); it != by->second.end()) held = &it->second;
        }
        if (!held) {
            const double waited = (now - req.declared_at).seconds();
            if (waited > req.max_wait_s) {
                injured.push_back({&req, Injury::Reason::NoReplica, 0});
            }
            continue;
        }
        const double age = age_of(*held, now);
        if (age > req.max_tolerated_age_s) {
            injured.push_back({&req, Injury::Reason::Stale, age});
        }
    }
    return injured;
}

ReconcileOutcome reconcile(const std::optional<ItemReplica>& local, const ItemReplica& incoming) {
    if (!local) return {incoming, true};
    if (incoming.version > local->version) return {incoming, true};
    return {*local, false};  // stale or identical push; holder keeps its copy
}

PropagationPlan propagation_plan(const InformationItem& item, const std::vector<Clique>& cliques,
                                 const std::vector<ConsistencyRequirement>& requirements,
                                 std::optional<CliqueId> origin_clique) {
    PropagationPlan plan;
    std::map<CliqueId, double> strictest;
    std::vector<std::pair<DeviceId, CliqueId>> seekers;
    for (const ConsistencyRequirement& req : requirements) {
        if (req.item_id != item.item_id) continue;
        const Clique* c = clique_of(cliques, req.seeker);
        if (!c) continue;
        auto [it, inserted] = strictest.emplace(c->id, req.max_tolerated_age_s);
        if (!inserted) it->second = std::min(it->second, req.max_tolerated_age_s);
        seekers.emplace_back(req.seeker, c->id);
    }

    if (item.properties.scope == Scope::CliqueLocal) {
        // privacy: the item never leaves its origin clique
        for (auto& [seeker, cid] : seekers) {
            if (!origin_clique || cid != *origin_clique) plan.unservable_seekers.push_back(seeker);
        }
        std::sort(plan.unservable_seekers.begin(), plan.unservable_seekers.end());
        plan.unservable_seekers.erase(
            std::unique(plan.unservable_seekers.begin(), plan.unservable_seekers.end()),
            plan.unservable_seekers.end());
        if (origin_clique && strictest.count(*origin_clique)) {
            plan.targets.push_back({*origin_clique, strictest[*origin_clique]});
        }
        return plan;
    }

    for (auto& [cid, age] : strictest) plan.targets.push_back({cid, age});
    std::sort(plan.targets.begin(), plan.targets.end(),
              [](const PropagationTarget& a, const PropagationTarget& b) {
                  if (a.strictest_age_s != b.strictest_age_s)
                      return a.strictest_age_s < b.strictest_age_s;
                  return a.clique < b.clique;
              });
    return plan;
}

std::vector<ProviderRole> provider_roles(const ReplicaTable& replicas,
                                         const std::map<std::string, InformationItem>& catalog) {
    std::vector<ProviderRole> out;
    for (const auto& [holder, by_item] : replicas) {
        ProviderRole role;
        role.device = holder;
        for (const auto& [item_id, replica] : by_item) {
            role.provided_items.insert(item_id);
            auto it = catalog.find(item_id);
            if (it != catalog.end() && it->second.origin && *it->second.origin != holder) {
                role.delegate_of = *it->second.origin;
            }
        }
        if (!role.provided_items.empty()) out.push_back(std::move(role));
    }
    return out;
}

std::vector<SeekerRole> seeker_roles(const std::vector<ConsistencyRequirement>& requirements) {
    std::map<DeviceId, SeekerRole> by_device;
    for (const ConsistencyRequirement& req : requirements) {
        auto& role = by_device[req.seeker];
        role.device = req.seeker;
        role.sought_items.insert(req.item_id);
    }
    std::vector<SeekerRole> out;
    for (auto& [_, role] : by_device) out.push_back(std::move(role));
    return out;
}

}  // namespace injectsim
