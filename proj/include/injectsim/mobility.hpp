#pragma once

#include <vector>

#include "injectsim/device.hpp"
#include "injectsim/rng.hpp"

namespace injectsim {

/// Random-waypoint step: each device with a waypoint moves toward it at its
/// speed, clamped at the waypoint; a mobile device that reached its waypoint
/// pauses, then draws a new uniform target inside the bounds. Positions never
/// leave the bounds. Devices with speed 0 stay put.
void step_mobility(std::vector<Device>& devices, double dt_s, const Rect& bounds, Rng& rng,
                   double pause_s, SimTime now);

}  // namespace injectsim
