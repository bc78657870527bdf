#include "injectsim/trace.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace injectsim {

namespace {

const char* kKindNames[] = {"TICK", "MSG", "ELECT", "HANDOVER", "INJECT", "INFECT", "INJURY",
                            "REGISTER"};

std::string device_field(std::optional<DeviceId> d) {
    return d ? std::to_string(d->value) : std::string("B");
}

std::string opt_field(std::optional<std::uint32_t> v) {
    return v ? std::to_string(*v) : std::string("-");
}

}  // namespace

const char* to_string(RecordKind k) { return kKindNames[static_cast<int>(k)]; }

std::optional<RecordKind> record_kind_from(const std::string& s) {
    for (int i = 0; i < 8; ++i) {
        if (s == kKindNames[i]) return static_cast<RecordKind>(i);
    }
    return std::nullopt;
}

std::string format_score(double score) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", score);
    return buf;
}

void TraceWriter::emit(SimTime t, RecordKind kind, const std::vector<std::string>& fields) {
    if (any_ && t < last_) {
        throw SimulationError("trace: record at " + t.str() + " after " + last_.str());
    }
    last_ = t;
    any_ = true;
    *out_ << t.str() << '\t' << to_string(kind);
    for (const std::string& f : fields) *out_ << '\t' << f;
    *out_ << '\n';
}

void TraceWriter::tick(SimTime t, std::uint64_t epoch, std::size_t alive, std::size_t cliques) {
    emit(t, RecordKind::TICK,
         {std::to_string(epoch), std::to_string(alive), std::to_string(cliques)});
}

void TraceWriter::msg(SimTime t, MsgKind kind, Hop hop, std::optional<DeviceId> sender,
                      std::optional<DeviceId> receiver, const std::string& item_id,
                      std::uint32_t version, std::optional<Scope> scope,
                      std::optional<std::uint32_t> event_id, int size_units) {
    emit(t, RecordKind::MSG,
         {to_string(kind), to_string(hop), device_field(sender), device_field(receiver),
          item_id.empty() ? "-" : item_id, version == 0 ? "-" : std::to_string(version),
          scope ? (*scope == Scope::CliqueLocal ? "l" : "g") : "-", opt_field(event_id),
          std::to_string(size_units)});
}

void TraceWriter::elect(SimTime t, CliqueId clique, DeviceId winner, double score, int messages) {
    emit(t, RecordKind::ELECT,
         {std::to_string(clique.value), std::to_string(winner.value), format_score(score),
          std::to_string(messages)});
}

void TraceWriter::handover(SimTime t, CliqueId clique, DeviceId old_ip, DeviceId new_ip,
                           double old_score, double new_score) {
    emit(t, RecordKind::HANDOVER,
         {std::to_string(clique.value), std::to_string(old_ip.value),
          std::to_string(new_ip.value), format_score(old_score), format_score(new_score)});
}

void TraceWriter::inject(SimTime t, const InjectionEvent& ev) {
    emit(t, RecordKind::INJECT,
         {std::to_string(ev.event_id), to_string(ev.kind), to_string(ev.status),
          device_field(ev.initiator), device_field(ev.injection_point),
          ev.item_id.empty() ? "-" : ev.item_id,
          ev.version == 0 ? "-" : std::to_string(ev.version),
          ev.source_clique ? std::to_string(ev.source_clique->value) : "-",
          ev.target_clique ? std::to_string(ev.target_clique->value) : "-",
          ev.requested_at.str(), ev.delivered_at ? ev.delivered_at->str() : "-",
          std::to_string(ev.backbone_messages), std::to_string(ev.adhoc_messages)});
}

void TraceWriter::infect(SimTime t, DeviceId device, const std::string& item_id,
                         std::uint32_t version, std::optional<DeviceId> by,
                         std::optional<std::uint32_t> event_id) {
    emit(t, RecordKind::INFECT,
         {std::to_string(device.value), item_id, std::to_string(version), device_field(by),
          opt_field(event_id)});
}

void TraceWriter::injury_declared(SimTime t, const ConsistencyRequirement& req,
                                  std::optional<CliqueId> clique) {
    emit(t, RecordKind::INJURY,
         {std::to_string(req.seeker.value), req.item_id, "declared", "-",
          clique ? std::to_string(clique->value) : "-"});
}

void TraceWriter::injury(SimTime t, const Injury& inj, std::optional<CliqueId> clique) {
    emit(t, RecordKind::INJURY,
         {std::to_string(inj.requirement->seeker.value), inj.requirement->item_id,
          inj.reason == Injury::Reason::NoReplica ? "no_replica" : "stale",
          inj.reason == Injury::Reason::Stale ? format_score(inj.age_s) : "-",
          clique ? std::to_string(clique->value) : "-"});
}

void TraceWriter::registered(SimTime t, DeviceId device, const std::string& service_id,
                             CliqueId clique, bool automatic) {
    emit(t, RecordKind::REGISTER,
         {std::to_string(device.value), service_id, std::to_string(clique.value),
          automatic ? "auto" : "manual"});
}

std::vector<TraceRecord> read_trace(std::istream& in) {
    std::vector<TraceRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            cols.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (cols.size() < 2) {
            throw ScenarioError("trace line " + std::to_string(lineno) + ": too few fields");
        }
        TraceRecord rec;
        try {
            rec.time = SimTime::from_seconds(std::stod(cols[0]));
        } catch (const std::exception&) {
            throw ScenarioError("trace line " + std::to_string(lineno) + ": bad time '" +
                                cols[0] + "'");
        }
        auto kind = record_kind_from(cols[1]);
        if (!kind) {
            throw ScenarioError("trace line " + std::to_string(lineno) + ": unknown kind '" +
                                cols[1] + "'");
        }
        rec.kind = *kind;
        rec.fields.assign(cols.begin() + 2, cols.end());
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<TraceRecord> parse_trace(const std::string& text) {
    std::istringstream in(text);
    return read_trace(in);
}

}  // namespace injectsim
