#include "injectsim/cost.hpp"

#include <algorithm>

namespace injectsim {

std::int64_t CostLedger::total_units() const {
    std::int64_t t = 0;
    for (const auto& [_, e] : entries_) t += e.total_units();
    return t;
}

std::int64_t CostLedger::total_shared_units() const {
    std::int64_t t = 0;
    for (const auto& [_, e] : entries_) t += e.shared_units_received;
    return t;
}

std::int64_t CostLedger::total_backbone_units() const {
    std::int64_t t = 0;
    for (const auto& [_, e] : entries_) t += e.backbone_units;
    return t;
}

std::int64_t CostLedger::total_adhoc_units() const {
    std::int64_t t = 0;
    for (const auto& [_, e] : entries_) t += e.adhoc_units;
    return t;
}

double CostLedger::total_energy() const {
    double t = 0;
    for (const auto& [_, e] : entries_) t += e.energy_spent;
    return t;
}

void bill_injection(CostLedger& ledger, const InjectionEvent& event,
                    const std::vector<DeviceId>& interested, const CostModel& model) {
    const std::int64_t total = event.backbone_messages * model.backbone_msg_cost;
    if (total == 0) return;

    if (event.kind == InjectionKind::EntityDriven) {
        const DeviceId payer = event.initiator.value_or(event.injection_point.value_or(DeviceId{}));
        ledger.entry(payer).backbone_units += total;
        return;
    }

    std::vector<DeviceId> shares(interested);
    std::sort(shares.begin(), shares.end());
    shares.erase(std::unique(shares.begin(), shares.end()), shares.end());

    // remainder (and the empty-set fallback) lands on the injection point
    const DeviceId anchor = event.injection_point.value_or(
        event.initiator.value_or(shares.empty() ? DeviceId{} : shares.front()));
    if (shares.empty()) {
        ledger.entry(anchor).shared_units_received += total;
        return;
    }
    const std::int64_t n = static_cast<std::int64_t>(shares.size());
    const std::int64_t base = total / n;
    const std::int64_t remainder = total % n;
    for (DeviceId d : shares) ledger.entry(d).shared_units_received += base;
    ledger.entry(anchor).shared_units_received += remainder;
}

}  // namespace injectsim
