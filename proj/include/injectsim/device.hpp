#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "injectsim/core.hpp"

namespace injectsim {

/// A mobile node. Battery 0 or departure drops the device out of the
/// topology: it sends and receives nothing.
struct Device {
    DeviceId id;
    Vec2 position{};
    std::optional<Vec2> waypoint;
    double speed = 0;             // m/s
    double battery = 1.0;         // fraction, in [0,1]
    double radio_range = 10.0;    // m
    bool backbone_capable = false;
    double equipment_score = 0;   // fraction, in [0,1]
    std::optional<SimTime> expected_departure;
    std::set<std::string> registrations;  // service ids
    int load = 0;                 // active protocol duties
    int base_load = 0;            // scenario-declared standing load

    // engine bookkeeping
    bool mobile = false;          // draws random waypoints when true
    SimTime arrival;              // enters the world at this time
    bool departed = false;
    SimTime pause_until;          // random-waypoint pause window

    bool present(SimTime now) const { return now >= arrival && !departed && battery > 0; }
    bool eligible(SimTime now) const { return present(now) && backbone_capable; }
};

/// Devices are kept sorted by id; lookups binary-search.
const Device* find_device(const std::vector<Device>& devices, DeviceId id);
Device* find_device(std::vector<Device>& devices, DeviceId id);

}  // namespace injectsim
