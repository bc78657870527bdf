#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "injectsim/device.hpp"

namespace injectsim {

/// Symmetric proximity graph over present devices. Edge (a,b) exists iff
/// euclidean distance <= min(range_a, range_b) and both are present
/// (min-of-ranges keeps adjacency symmetric).
class AdHocTopology {
public:
    AdHocTopology() = default;

    /// Recomputes adjacency; epoch advances only when node or edge set changed.
    static AdHocTopology rebuild(const std::vector<Device>& devices, SimTime now,
                                 const AdHocTopology* previous = nullptr);

    /// Builds an explicit graph, for tests and graph-metric queries.
    static AdHocTopology from_edges(const std::vector<DeviceId>& nodes,
                                    const std::vector<std::pair<DeviceId, DeviceId>>& edges);

    bool has_node(DeviceId d) const { return adj_.count(d) != 0; }
    const std::vector<DeviceId>& neighbors(DeviceId d) const;
    bool adjacent(DeviceId a, DeviceId b) const;
    const std::map<DeviceId, std::vector<DeviceId>>& adjacency() const { return adj_; }
    std::vector<DeviceId> nodes() const;
    std::size_t node_count() const { return adj_.size(); }
    std::size_t edge_count() const;
    std::uint64_t epoch() const { return epoch_; }

    /// Local clustering coefficient: triangles through d over possible
    /// neighbor pairs; 0 when degree < 2.
    double clustering_coefficient(DeviceId d) const;

private:
    std::map<DeviceId, std::vector<DeviceId>> adj_;  // sorted neighbor lists
    std::uint64_t epoch_ = 0;
};

/// A clique in the paper's sense: one connected component of the proximity
/// graph, i.e. a physical multi-hop group — not a graph-theoretic clique.
struct Clique {
    CliqueId id;                       // smallest member id
    std::vector<DeviceId> members;     // sorted
    std::optional<DeviceId> injection_point;

    bool has_member(DeviceId d) const;
};

/// Connected components of present devices, sorted by clique id. A previous
/// injection point carries over iff it is still a member and alive; when
/// cliques merge, the carryover from the smallest previous clique id wins
/// (hysteresis-driven maintenance may hand over afterwards).
std::vector<Clique> compute_cliques(const AdHocTopology& topology,
                                    const std::vector<Device>& devices, SimTime now,
                                    const std::vector<Clique>* previous = nullptr);

const Clique* clique_of(const std::vector<Clique>& cliques, DeviceId d);

}  // namespace injectsim
