#include "injectsim/epidemic.hpp"

#include <algorithm>

namespace injectsim {

Dissemination::Dissemination(std::uint32_t handle_id, std::string item_id, std::uint32_t version,
                             DeviceId seed_device, SimTime start,
                             std::optional<std::uint32_t> injection_event)
    : handle_id_(handle_id),
      item_id_(std::move(item_id)),
      version_(version),
      seed_(seed_device),
      injection_event_(injection_event) {
    infections_[seed_device] = Infection{start, std::nullopt};
}

namespace {

bool sendable(const std::vector<Device>& devices, DeviceId id, SimTime now) {
    const Device* d = find_device(devices, id);
    return d && d->present(now);
}

}  // namespace

std::vector<Dissemination::Transmission> Dissemination::gossip_round(
    const AdHocTopology& topology, const std::vector<Device>& devices, int fanout, Rng& rng,
    SimTime now, const std::set<DeviceId>& immune, const std::set<DeviceId>* interest_filter) {
    std::vector<Transmission> sent;
    if (complete_ || fanout < 1) return sent;

    // snapshot: senders and susceptibility are fixed at round start
    std::vector<DeviceId> senders;
    senders.reserve(infections_.size());
    for (const auto& [d, _] : infections_) senders.push_back(d);

    auto susceptible_at_start = [&](DeviceId d) {
        return !infections_.count(d) && !immune.count(d) &&
               (!interest_filter || interest_filter->count(d));
    };

    std::set<DeviceId> newly;
    for (DeviceId from : senders) {
        if (!sendable(devices, from, now)) continue;
        std::vector<DeviceId> candidates;
        for (DeviceId nb : topology.neighbors(from)) {
            if (susceptible_at_start(nb) && sendable(devices, nb, now)) candidates.push_back(nb);
        }
        for (DeviceId to : rng.sample(candidates, static_cast<std::size_t>(fanout))) {
            if (newly.count(to)) {
                // another sender got there first this round; the piggybacked
                // state suppresses the push before it costs a message
                ++suppressed_;
                continue;
            }
            newly.insert(to);
            infections_[to] = Infection{now, from};
            sent.push_back({from, to});
        }
    }

    if (sent.empty()) {
        complete_ = true;
    } else {
        ++rounds_;
        messages_ += static_cast<int>(sent.size());
    }
    return sent;
}

void Dissemination::settle_if_spent(const AdHocTopology& topology,
                                    const std::vector<Device>& devices, SimTime now,
                                    const std::set<DeviceId>& immune) {
    if (complete_) return;
    for (const auto& [d, _] : infections_) {
        if (!sendable(devices, d, now)) continue;
        for (DeviceId nb : topology.neighbors(d)) {
            if (!infections_.count(nb) && !immune.count(nb) && sendable(devices, nb, now)) {
                return;  // a transmission is still possible
            }
        }
    }
    complete_ = true;
}

double infection_coverage(const Dissemination& d, const Clique& clique,
                          const std::set<DeviceId>& interested) {
    std::size_t total = 0;
    std::size_t hit = 0;
    for (DeviceId m : clique.members) {
        if (!interested.count(m)) continue;
        ++total;
        if (d.infected(m)) ++hit;
    }
    if (total == 0) return 1.0;  // vacuous
    return static_cast<double>(hit) / static_cast<double>(total);
}

}  // namespace injectsim
