#include "injectsim/mobility.hpp"

#include <algorithm>
#include <cmath>

namespace injectsim {

namespace {

Vec2 clamp_to(const Rect& bounds, Vec2 p) {
    return {std::clamp(p.x, bounds.x, bounds.x + bounds.width),
            std::clamp(p.y, bounds.y, bounds.y + bounds.height)};
}

}  // namespace

void step_mobility(std::vector<Device>& devices, double dt_s, const Rect& bounds, Rng& rng,
                   double pause_s, SimTime now) {
    for (Device& d : devices) {
        if (!d.present(now) || d.speed <= 0) continue;

        if (!d.waypoint && d.mobile && now >= d.pause_until) {
            d.waypoint = Vec2{rng.uniform(bounds.x, bounds.x + bounds.width),
                              rng.uniform(bounds.y, bounds.y + bounds.height)};
        }
        if (!d.waypoint) continue;

        const Vec2 to = *d.waypoint - d.position;
        const double dist = std::hypot(to.x, to.y);
        const double step = d.speed * dt_s;
        if (dist <= step) {
            d.position = *d.waypoint;  // clamp at the waypoint, no overshoot
            d.waypoint.reset();
            d.pause_until = now + SimTime::from_seconds(pause_s);
        } else {
            d.position = d.position + Vec2{to.x / dist * step, to.y / dist * step};
        }
        d.position = clamp_to(bounds, d.position);
    }
}

}  // namespace injectsim
