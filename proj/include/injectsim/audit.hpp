#pragma once

#include <string>
#include <vector>

#include "injectsim/metrics.hpp"
#include "injectsim/trace.hpp"

namespace injectsim {

/// Independent post-run pass: recomputes message counts, per-event
/// conservation, cost totals and coverage from the raw trace and compares
/// them to the metrics row; also checks time monotonicity and that no
/// clique-local payload ever crossed a backbone hop.
struct AuditReport {
    bool passed = true;
    std::vector<std::string> failures;
    std::string summary() const;
};

AuditReport audit_trace(const std::vector<TraceRecord>& records, const RunMetrics& metrics);
AuditReport audit_trace(const std::string& trace_text, const RunMetrics& metrics);

}  // namespace injectsim
