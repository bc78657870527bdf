#include "injectsim/injection.hpp"

#include <algorithm>

namespace injectsim {

const char* to_string(InjectionKind k) {
    switch (k) {
        case InjectionKind::BackboneRequested: return "backbone_requested";
        case InjectionKind::BackboneSpontaneous: return "backbone_spontaneous";
        case InjectionKind::EntityDriven: return "entity_driven";
        case InjectionKind::CliqueSpontaneous: return "clique_spontaneous";
        case InjectionKind::CliqueForced: return "clique_forced";
        case InjectionKind::WormholeDirect: return "wormhole_direct";
        case InjectionKind::WormholeMediated: return "wormhole_mediated";
    }
    return "?";
}

const char* to_string(InjectionStatus s) {
    switch (s) {
        case InjectionStatus::InFlight: return "in_flight";
        case InjectionStatus::Delivered: return "delivered";
        case InjectionStatus::Complete: return "complete";
        case InjectionStatus::NoBackboneCapableDevice: return "no_backbone_capable_device";
        case InjectionStatus::UnknownItem: return "unknown_item";
        case InjectionStatus::EmptyRegistry: return "empty_registry";
        case InjectionStatus::NotBackboneCapable: return "not_backbone_capable";
        case InjectionStatus::ItemNotPresentInClique: return "item_not_present_in_clique";
        case InjectionStatus::TargetUnreachable: return "target_unreachable";
        case InjectionStatus::NoHolderClique: return "no_holder_clique";
        case InjectionStatus::PrivacyBlocked: return "privacy_blocked";
        case InjectionStatus::DeliveryFailed: return "delivery_failed";
        case InjectionStatus::RejectedSameClique: return "rejected_same_clique";
    }
    return "?";
}

bool is_failure(InjectionStatus s) {
    return s != InjectionStatus::InFlight && s != InjectionStatus::Delivered &&
           s != InjectionStatus::Complete;
}

const char* to_string(MsgKind k) {
    switch (k) {
        case MsgKind::Request: return "request";
        case MsgKind::Deliver: return "deliver";
        case MsgKind::Forward: return "forward";
        case MsgKind::ForceInject: return "force_inject";
        case MsgKind::Register: return "register";
        case MsgKind::Probe: return "probe";
        case MsgKind::Ack: return "ack";
    }
    return "?";
}

const char* to_string(Hop h) { return h == Hop::Adhoc ? "adhoc" : "backbone"; }

void BackboneService::register_device(const std::string& service_id, DeviceId device, SimTime now,
                                      CliqueId clique) {
    registry_[service_id][device] = RegistryEntry{device, now, clique, false};
}

int BackboneService::purge_expired(SimTime now, double ttl_s) {
    int purged = 0;
    const SimTime ttl = SimTime::from_seconds(ttl_s);
    for (auto& [service, entries] : registry_) {
        for (auto it = entries.begin(); it != entries.end();) {
            if (it->second.registered_at + ttl < now) {
                it = entries.erase(it);
                ++purged;
            } else {
                ++it;
            }
        }
    }
    return purged;
}

void BackboneService::mark_stale(const std::string& service_id, DeviceId device) {
    auto s = registry_.find(service_id);
    if (s == registry_.end()) return;
    auto e = s->second.find(device);
    if (e != s->second.end()) e->second.stale = true;
}

std::vector<RegistryEntry> BackboneService::registrants(const std::string& service_id) const {
    std::vector<RegistryEntry> out;
    auto s = registry_.find(service_id);
    if (s == registry_.end()) return out;
    for (const auto& [_, entry] : s->second) {
        if (!entry.stale) out.push_back(entry);
    }
    return out;
}

bool BackboneService::registry_empty(const std::string& service_id) const {
    return registrants(service_id).empty();
}

void BackboneService::store_item(const InformationItem& item) {
    item_store_[item.item_id] = item;
}

const InformationItem* BackboneService::stored(const std::string& item_id) const {
    auto it = item_store_.find(item_id);
    return it == item_store_.end() ? nullptr : &it->second;
}

void BackboneService::erase_item(const std::string& item_id) { item_store_.erase(item_id); }

void BackboneService::record_location(const std::string& item_id, CliqueId clique,
                                      std::uint32_t version) {
    auto& v = locations_[item_id][clique];
    v = std::max(v, version);
}

void BackboneService::forget_locations(const std::string& item_id) { locations_.erase(item_id); }

const std::map<CliqueId, std::uint32_t>* BackboneService::locations(
    const std::string& item_id) const {
    auto it = locations_.find(item_id);
    return it == locations_.end() ? nullptr : &it->second;
}

std::uint64_t BackboneService::store_hash() const {
    std::uint64_t h = fnv1a64("store");
    for (const auto& [id, item] : item_store_) {  // map order pins the digest
        h = fnv1a64(id, h);
        h = fnv1a64(&item.version, sizeof item.version, h);
        h = fnv1a64(&item.payload_digest, sizeof item.payload_digest, h);
    }
    return h;
}

}  // namespace injectsim
