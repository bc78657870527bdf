#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "injectsim/injection.hpp"

namespace injectsim {

/// Backbone messages are two orders of magnitude pricier than ad-hoc ones by
/// default; ad-hoc is near-free, not free.
struct CostModel {
    std::int64_t backbone_msg_cost = 100;  // units per message
    std::int64_t adhoc_msg_cost = 1;
    double backbone_energy = 1e-3;         // battery fraction per transmit
    double adhoc_energy = 1e-4;

    bool valid() const { return backbone_msg_cost > adhoc_msg_cost && adhoc_msg_cost > 0; }

    bool operator==(const CostModel&) const = default;
};

struct LedgerEntry {
    std::int64_t backbone_units = 0;         // billed directly (own fetches, registrations)
    std::int64_t adhoc_units = 0;            // billed per transmission sent
    std::int64_t shared_units_received = 0;  // allocations from shared injections
    double energy_spent = 0;

    std::int64_t total_units() const { return backbone_units + adhoc_units + shared_units_received; }
};

class CostLedger {
public:
    LedgerEntry& entry(DeviceId d) { return entries_[d]; }
    const std::map<DeviceId, LedgerEntry>& entries() const { return entries_; }

    std::int64_t total_units() const;
    std::int64_t total_shared_units() const;
    std::int64_t total_backbone_units() const;
    std::int64_t total_adhoc_units() const;
    double total_energy() const;

private:
    std::map<DeviceId, LedgerEntry> entries_;
};

/// Splits an injection's backbone cost equally among the interested devices;
/// the integer remainder goes to the injection point, which is added to the
/// split when not already interested. Entity-driven injections bill the
/// initiator in full. Ad-hoc costs are billed to senders as messages are
/// emitted, not here. The allocations always sum to the event's exact
/// backbone cost.
void bill_injection(CostLedger& ledger, const InjectionEvent& event,
                    const std::vector<DeviceId>& interested, const CostModel& model);

}  // namespace injectsim
