#include "injectsim/graph_metrics.hpp"

#include <deque>
#include <limits>
#include <map>

namespace injectsim {

namespace {

GraphMetrics metrics_over(const std::map<DeviceId, std::vector<DeviceId>>& adj) {
    const std::size_t n = adj.size();
    if (n < 2) throw ScenarioError("graph_efficiency: fewer than two devices");

    double inv_sum = 0;
    double dist_sum = 0;
    std::uint64_t connected_pairs = 0;  // ordered

    for (const auto& [src, _] : adj) {
        // BFS hop distances from src
        std::map<DeviceId, int> dist{{src, 0}};
        std::deque<DeviceId> frontier{src};
        while (!frontier.empty()) {
            DeviceId d = frontier.front();
            frontier.pop_front();
            for (DeviceId nb : adj.at(d)) {
                if (dist.emplace(nb, dist[d] + 1).second) frontier.push_back(nb);
            }
        }
        for (const auto& [dst, hops] : dist) {
            if (dst == src) continue;
            inv_sum += 1.0 / hops;
            dist_sum += hops;
            ++connected_pairs;
        }
    }

    const auto total_pairs = static_cast<std::uint64_t>(n) * (n - 1);
    GraphMetrics m;
    m.global_efficiency = inv_sum / static_cast<double>(total_pairs);
    m.connected = connected_pairs == total_pairs;
    m.disconnected_pair_fraction =
        static_cast<double>(total_pairs - connected_pairs) / static_cast<double>(total_pairs);
    m.characteristic_path_length =
        connected_pairs ? dist_sum / static_cast<double>(connected_pairs)
                        : std::numeric_limits<double>::quiet_NaN();
    return m;
}

}  // namespace

GraphMetrics graph_efficiency(const AdHocTopology& topology) {
    return metrics_over(topology.adjacency());
}

GraphMetrics graph_efficiency_hybrid(const AdHocTopology& topology,
                                     const std::vector<Device>& devices, SimTime now) {
    auto adj = topology.adjacency();
    std::vector<DeviceId> gateways;
    for (const Device& d : devices) {
        if (d.eligible(now) && adj.count(d.id)) gateways.push_back(d.id);
    }
    for (std::size_t i = 0; i < gateways.size(); ++i) {
        for (std::size_t j = i + 1; j < gateways.size(); ++j) {
            auto& a = adj[gateways[i]];
            auto& b = adj[gateways[j]];
            if (std::find(a.begin(), a.end(), gateways[j]) == a.end()) {
                a.push_back(gateways[j]);
                b.push_back(gateways[i]);
            }
        }
    }
    return metrics_over(adj);
}

}  // namespace injectsim
