#include "injectsim/topology.hpp"

#include <algorithm>
#include <deque>

namespace injectsim {

namespace {
const std::vector<DeviceId> kNoNeighbors;
}

const Device* find_device(const std::vector<Device>& devices, DeviceId id) {
    auto it = std::lower_bound(devices.begin(), devices.end(), id,
                               [](const Device& d, DeviceId v) { return d.id < v; });
    return (it != devices.end() && it->id == id) ? &*it : nullptr;
}

Device* find_device(std::vector<Device>& devices, DeviceId id) {
    return const_cast<Device*>(find_device(std::as_const(devices), id));
}

AdHocTopology AdHocTopology::rebuild(const std::vector<Device>& devices, SimTime now,
                                     const AdHocTopology* previous) {
    AdHocTopology t;
    std::vector<const Device*> present;
    for (const Device& d : devices) {
        if (d.present(now)) {
            present.push_back(&d);
            t.adj_[d.id];  // isolated devices are nodes too
        }
    }
    for (std::size_t i = 0; i < present.size(); ++i) {
        for (std::size_t j = i + 1; j < present.size(); ++j) {
            const Device& a = *present[i];
            const Device& b = *present[j];
            if (distance(a.position, b.position) <= std::min(a.radio_range, b.radio_range)) {
                t.adj_[a.id].push_back(b.id);
                t.adj_[b.id].push_back(a.id);
            }
        }
    }
    for (auto& [id, nbrs] : t.adj_) std::sort(nbrs.begin(), nbrs.end());
    if (previous) {
        t.epoch_ = previous->epoch_ + (t.adj_ == previous->adj_ ? 0 : 1);
    }
    return t;
}

AdHocTopology AdHocTopology::from_edges(const std::vector<DeviceId>& nodes,
                                        const std::vector<std::pair<DeviceId, DeviceId>>& edges) {
    AdHocTopology t;
    for (DeviceId n : nodes) t.adj_[n];
    for (auto [a, b] : edges) {
        if (a == b) continue;
        t.adj_[a].push_back(b);
        t.adj_[b].push_back(a);
    }
    for (auto& [id, nbrs] : t.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return t;
}

const std::vector<DeviceId>& AdHocTopology::neighbors(DeviceId d) const {
    auto it = adj_.find(d);
    return it == adj_.end() ? kNoNeighbors : it->second;
}

bool AdHocTopology::adjacent(DeviceId a, DeviceId b) const {
    const auto& nbrs = neighbors(a);
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<DeviceId> AdHocTopology::nodes() const {
    std::vector<DeviceId> out;
    out.reserve(adj_.size());
    for (const auto& [id, _] : adj_) out.push_back(id);
    return out;
}

std::size_t AdHocTopology::edge_count() const {
    std::size_t twice = 0;
    for (const auto& [id, nbrs] : adj_) twice += nbrs.size();
    return twice / 2;
}

double AdHocTopology::clustering_coefficient(DeviceId d) const {
    const auto& nbrs = neighbors(d);
    const std::size_t k = nbrs.size();
    if (k < 2) return 0;
    std::size_t links = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (adjacent(nbrs[i], nbrs[j])) ++links;
    return static_cast<double>(2 * links) / static_cast<double>(k * (k - 1));
}

bool Clique::has_member(DeviceId d) const {
    return std::binary_search(members.begin(), members.end(), d);
}

std::vector<Clique> compute_cliques(const AdHocTopology& topology,
                                    const std::vector<Device>& devices, SimTime now,
                                    const std::vector<Clique>* previous) {
    std::vector<Clique> out;
    std::set<DeviceId> seen;
    for (const auto& [start, _] : topology.adjacency()) {
        if (seen.count(start)) continue;
        Clique c;
        std::deque<DeviceId> frontier{start};
        seen.insert(start);
        while (!frontier.empty()) {
            DeviceId d = frontier.front();
            frontier.pop_front();
            c.members.push_back(d);
            for (DeviceId n : topology.neighbors(d)) {
                if (seen.insert(n).second) frontier.push_back(n);
            }
        }
        std::sort(c.members.begin(), c.members.end());
        c.id = CliqueId(c.members.front());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Clique& a, const Clique& b) { return a.id < b.id; });

    if (previous) {
        // Carry injection points over; on merges the smallest previous clique
        // id donates its point.
        for (Clique& c : out) {
            for (const Clique& prev : *previous) {
                if (!prev.injection_point) continue;
                DeviceId ip = *prev.injection_point;
                const Device* dev = find_device(devices, ip);
                if (c.has_member(ip) && dev && dev->present(now)) {
                    c.injection_point = ip;
                    break;
                }
            }
        }
    }
    return out;
}

const Clique* clique_of(const std::vector<Clique>& cliques, DeviceId d) {
    for (const Clique& c : cliques)
        if (c.has_member(d)) return &c;
    return nullptr;
}

}  // namespace injectsim
