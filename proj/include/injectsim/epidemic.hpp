#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "injectsim/rng.hpp"
#include "injectsim/topology.hpp"

namespace injectsim {

struct Infection {
    SimTime infected_at;
    std::optional<DeviceId> infected_by;  // nullopt: seeded from the backbone
};

/// One push-gossip dissemination of a single item version, seeded at an
/// injection point. Rounds are synchronous: the infected set is snapshotted,
/// each infected device pushes to up to `fanout` neighbors that were
/// susceptible at round start, picked uniformly from the seeded stream.
/// Infected devices are never re-sent to (neighbor state piggybacks on prior
/// messages); a push whose target got infected earlier in the same round is
/// suppressed without a message and counted.
class Dissemination {
public:
    Dissemination(std::uint32_t handle_id, std::string item_id, std::uint32_t version,
                  DeviceId seed_device, SimTime start,
                  std::optional<std::uint32_t> injection_event = std::nullopt);

    struct Transmission {
        DeviceId from;
        DeviceId to;
    };

    /// Advances one round. `immune` marks devices already holding this
    /// version or newer; `interest_filter`, when set, restricts targets to
    /// the given devices. A round with no transmission completes the handle.
    std::vector<Transmission> gossip_round(const AdHocTopology& topology,
                                           const std::vector<Device>& devices, int fanout,
                                           Rng& rng, SimTime now,
                                           const std::set<DeviceId>& immune = {},
                                           const std::set<DeviceId>* interest_filter = nullptr);

    /// Marks the handle complete up front when no transmission could ever
    /// occur (e.g. a singleton clique).
    void settle_if_spent(const AdHocTopology& topology, const std::vector<Device>& devices,
                         SimTime now, const std::set<DeviceId>& immune = {});

    bool complete() const { return complete_; }
    bool infected(DeviceId d) const { return infections_.count(d) != 0; }
    const std::map<DeviceId, Infection>& infections() const { return infections_; }

    std::uint32_t handle_id() const { return handle_id_; }
    const std::string& item_id() const { return item_id_; }
    std::uint32_t version() const { return version_; }
    DeviceId seed() const { return seed_; }
    std::optional<std::uint32_t> injection_event() const { return injection_event_; }
    int rounds() const { return rounds_; }          // rounds that transmitted
    int messages() const { return messages_; }
    int suppressed() const { return suppressed_; }

private:
    std::uint32_t handle_id_;
    std::string item_id_;
    std::uint32_t version_;
    DeviceId seed_;
    std::optional<std::uint32_t> injection_event_;
    std::map<DeviceId, Infection> infections_;
    bool complete_ = false;
    int rounds_ = 0;
    int messages_ = 0;
    int suppressed_ = 0;
};

/// Infected fraction of the interested members; vacuously 1 when none of the
/// members is interested.
double infection_coverage(const Dissemination& d, const Clique& clique,
                          const std::set<DeviceId>& interested);

}  // namespace injectsim
