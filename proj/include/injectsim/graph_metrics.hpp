#pragma once

#include "injectsim/topology.hpp"

namespace injectsim {

struct GraphMetrics {
    /// Mean hop distance over connected ordered pairs; NaN when no pair connects.
    double characteristic_path_length = 0;
    /// Mean of 1/d over all ordered pairs, 0 for disconnected ones; in [0,1].
    double global_efficiency = 0;
    double disconnected_pair_fraction = 0;
    bool connected = false;
};

/// Throws ScenarioError when the graph has fewer than two nodes.
GraphMetrics graph_efficiency(const AdHocTopology& topology);

/// Same metrics on the hybrid graph: backbone-capable present devices gain
/// pairwise virtual edges. Per-pair shortest paths can only shrink.
GraphMetrics graph_efficiency_hybrid(const AdHocTopology& topology,
                                     const std::vector<Device>& devices, SimTime now);

}  // namespace injectsim
