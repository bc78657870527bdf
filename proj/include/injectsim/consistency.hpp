#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "injectsim/topology.hpp"

namespace injectsim {

enum class Priority { Low, Normal, High };
enum class Scope { CliqueLocal, Global };

const char* to_string(Priority p);
const char* to_string(Scope s);

/// Authority-declared synchronization contract of an item. Clique-local items
/// never travel over a backbone hop.
struct ConsistencyProperties {
    double max_staleness_s = 60;
    Priority priority = Priority::Normal;
    Scope scope = Scope::Global;
};

/// A versioned datum. Versions of one item are totally ordered and produced
/// by a single authority (the backbone service or one originating device),
/// so last-writer-wins reconciliation is conflict-free.
struct InformationItem {
    std::string item_id;
    std::string service_id;
    std::uint32_t version = 0;
    std::uint64_t payload_digest = 0;
    std::optional<DeviceId> origin;  // nullopt: backbone service
    SimTime produced_at;
    ConsistencyProperties properties;
};

/// A seeker's individual tolerance; its violation ("injury") is what triggers
/// an injection. max_tolerated_age may be stricter or looser than the item's
/// own staleness bound.
struct ConsistencyRequirement {
    DeviceId seeker;
    std::string item_id;
    double max_tolerated_age_s = 60;
    double max_wait_s = 60;
    SimTime declared_at;
};

struct ItemReplica {
    DeviceId holder;
    std::string item_id;
    std::uint32_t version = 0;
    SimTime produced_at;   // of the replicated version, for age accounting
    SimTime received_at;
};

/// holder -> item -> replica; one version per holder and item.
using ReplicaTable = std::map<DeviceId, std::map<std::string, ItemReplica>>;

struct ProviderRole {
    DeviceId device;
    std::set<std::string> provided_items;
    std::optional<DeviceId> delegate_of;  // set when serving someone else's item
};

struct SeekerRole {
    DeviceId device;
    std::set<std::string> sought_items;
};

/// Staleness measured against production time, not receipt time.
double age_of(const ItemReplica& replica, SimTime now);

struct Injury {
    enum class Reason { NoReplica, Stale };
    const ConsistencyRequirement* requirement;
    Reason reason;
    double age_s = 0;  // meaningful for Stale
};

/// A requirement is injured iff the seeker holds no replica and has waited
/// longer than max_wait, or the replica's age strictly exceeds
/// max_tolerated_age. Boundary equality does not injure.
std::vector<Injury> check_requirements(const std::vector<ConsistencyRequirement>& requirements,
                                       const ReplicaTable& replicas, SimTime now);

struct ReconcileOutcome {
    ItemReplica replica;
    bool updated = false;  // false: incoming was stale or identical
};

/// Keeps the higher version; equal versions are idempotent.
ReconcileOutcome reconcile(const std::optional<ItemReplica>& local, const ItemReplica& incoming);

struct PropagationTarget {
    CliqueId clique;
    double strictest_age_s = 0;  // smallest max_tolerated_age among the clique's seekers
};

struct PropagationPlan {
    std::vector<PropagationTarget> targets;    // dissemination order
    std::vector<DeviceId> unservable_seekers;  // out-of-scope for clique-local items
};

/// Targets the cliques containing seekers of the item, ordered by the item's
/// priority class first (all targets share it), then strictest tolerated age,
/// then clique id. Clique-local items yield only the origin clique.
PropagationPlan propagation_plan(const InformationItem& item, const std::vector<Clique>& cliques,
                                 const std::vector<ConsistencyRequirement>& requirements,
                                 std::optional<CliqueId> origin_clique);

std::vector<ProviderRole> provider_roles(const ReplicaTable& replicas,
                                         const std::map<std::string, InformationItem>& catalog);
std::vector<SeekerRole> seeker_roles(const std::vector<ConsistencyRequirement>& requirements);

}  // namespace injectsim
