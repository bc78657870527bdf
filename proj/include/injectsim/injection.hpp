#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "injectsim/consistency.hpp"
#include "injectsim/core.hpp"

namespace injectsim {

enum class InjectionKind {
    BackboneRequested,
    BackboneSpontaneous,
    EntityDriven,
    CliqueSpontaneous,
    CliqueForced,
    WormholeDirect,
    WormholeMediated,
};

enum class InjectionStatus {
    InFlight,
    Delivered,   // payload arrived, dissemination still running
    Complete,
    NoBackboneCapableDevice,
    UnknownItem,
    EmptyRegistry,
    NotBackboneCapable,
    ItemNotPresentInClique,
    TargetUnreachable,
    NoHolderClique,
    PrivacyBlocked,     // clique-local item refused a backbone hop
    DeliveryFailed,     // endpoint died mid-flight
    RejectedSameClique, // wormhole with source == target
};

const char* to_string(InjectionKind k);
const char* to_string(InjectionStatus s);
bool is_failure(InjectionStatus s);

struct InjectionEvent {
    std::uint32_t event_id = 0;
    InjectionKind kind = InjectionKind::BackboneRequested;
    std::optional<DeviceId> initiator;       // nullopt: the backbone service
    std::optional<DeviceId> injection_point;
    std::string item_id;
    std::uint32_t version = 0;               // 0 until a concrete version is carried
    std::optional<CliqueId> source_clique;   // wormholes: sending side
    std::optional<CliqueId> target_clique;
    SimTime requested_at;
    std::optional<SimTime> delivered_at;
    int backbone_messages = 0;
    int adhoc_messages = 0;
    InjectionStatus status = InjectionStatus::InFlight;
    std::vector<DeviceId> interested;        // captured at injection time, drives cost sharing
};

enum class MsgKind { Request, Deliver, Forward, ForceInject, Register, Probe, Ack };
enum class Hop { Adhoc, Backbone };

const char* to_string(MsgKind k);
const char* to_string(Hop h);

struct RegistryEntry {
    DeviceId device;
    SimTime registered_at;
    CliqueId last_known_clique;
    bool stale = false;  // flagged when a push found the registrant gone
};

/// Backbone-side registration service and item store. In relay-only wormhole
/// mode the store is never touched: tunneled items pass through transiently.
class BackboneService {
public:
    /// Inserts or refreshes; re-registration updates timestamp and clique.
    void register_device(const std::string& service_id, DeviceId device, SimTime now,
                         CliqueId clique);

    /// Drops entries older than ttl_s. Returns how many were purged.
    int purge_expired(SimTime now, double ttl_s);

    void mark_stale(const std::string& service_id, DeviceId device);

    /// Non-stale entries for a service, ascending device id.
    std::vector<RegistryEntry> registrants(const std::string& service_id) const;
    bool registry_empty(const std::string& service_id) const;

    void store_item(const InformationItem& item);
    const InformationItem* stored(const std::string& item_id) const;
    void erase_item(const std::string& item_id);

    /// Clique-side holdings the backbone has learnt about, from registration
    /// piggybacks and clique injections: item -> clique -> freshest version.
    void record_location(const std::string& item_id, CliqueId clique, std::uint32_t version);
    void forget_locations(const std::string& item_id);
    const std::map<CliqueId, std::uint32_t>* locations(const std::string& item_id) const;

    /// Order-independent digest of the whole store, for relay-purity checks.
    std::uint64_t store_hash() const;

    const std::map<std::string, std::map<DeviceId, RegistryEntry>>& registry() const {
        return registry_;
    }
    const std::map<std::string, InformationItem>& item_store() const { return item_store_; }

private:
    std::map<std::string, std::map<DeviceId, RegistryEntry>> registry_;
    std::map<std::string, InformationItem> item_store_;
    std::map<std::string, std::map<CliqueId, std::uint32_t>> locations_;
};

}  // namespace injectsim
