#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "injectsim/consistency.hpp"
#include "injectsim/injection.hpp"

namespace injectsim {

/// One record per line, tab-separated: time, kind, then kind-specific fields.
/// Formats are pinned; the audit pass parses them back. Absent values are "-";
/// the backbone endpoint is "B".
///
///   TICK      epoch alive cliques
///   MSG       kind hop sender receiver item version scope event size
///   ELECT     clique winner score messages
///   HANDOVER  clique old new old_score new_score
///   INJECT    event kind status initiator injection_point item version
///             source_clique target_clique requested_at delivered_at
///             backbone_msgs adhoc_msgs
///   INFECT    device item version by event
///   INJURY    seeker item reason age clique      (reason: declared | no_replica | stale)
///   REGISTER  device service clique mode         (mode: manual | auto)
enum class RecordKind { TICK, MSG, ELECT, HANDOVER, INJECT, INFECT, INJURY, REGISTER };

const char* to_string(RecordKind k);
std::optional<RecordKind> record_kind_from(const std::string& s);

struct TraceRecord {
    SimTime time;
    RecordKind kind;
    std::vector<std::string> fields;
};

std::string format_score(double score);  // fixed 6 decimals

class TraceWriter {
public:
    explicit TraceWriter(std::ostream& out) : out_(&out) {}

    void tick(SimTime t, std::uint64_t epoch, std::size_t alive, std::size_t cliques);
    void msg(SimTime t, MsgKind kind, Hop hop, std::optional<DeviceId> sender,
             std::optional<DeviceId> receiver, const std::string& item_id, std::uint32_t version,
             std::optional<Scope> scope, std::optional<std::uint32_t> event_id, int size_units);
    void elect(SimTime t, CliqueId clique, DeviceId winner, double score, int messages);
    void handover(SimTime t, CliqueId clique, DeviceId old_ip, DeviceId new_ip, double old_score,
                  double new_score);
    void inject(SimTime t, const InjectionEvent& ev);
    void infect(SimTime t, DeviceId device, const std::string& item_id, std::uint32_t version,
                std::optional<DeviceId> by, std::optional<std::uint32_t> event_id);
    void injury_declared(SimTime t, const ConsistencyRequirement& req,
                         std::optional<CliqueId> clique);
    void injury(SimTime t, const Injury& inj, std::optional<CliqueId> clique);
    void registered(SimTime t, DeviceId device, const std::string& service_id, CliqueId clique,
                    bool automatic);

private:
    void emit(SimTime t, RecordKind kind, const std::vector<std::string>& fields);

    std::ostream* out_;
    SimTime last_;
    bool any_ = false;
};

/// Parses a full trace; throws ScenarioError on malformed lines.
std::vector<TraceRecord> read_trace(std::istream& in);
std::vector<TraceRecord> parse_trace(const std::string& text);

}  // namespace injectsim
