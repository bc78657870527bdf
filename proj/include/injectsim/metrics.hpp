#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "injectsim/injection.hpp"
#include "injectsim/scenario.hpp"

namespace injectsim {

/// One flat row per run. Column order is pinned by header()/row().
struct RunMetrics {
    std::string scenario;
    std::uint64_t seed = 0;
    RunMode mode = RunMode::Injection;
    double duration_s = 0;
    std::uint64_t ticks = 0;
    std::size_t devices_total = 0;

    std::size_t requirements_total = 0;
    std::size_t requirements_covered = 0;
    double coverage = 1.0;  // covered / total, vacuously 1
    std::size_t unserved_requirements = 0;
    double mean_staleness_s = 0;  // time-weighted over held replicas

    std::int64_t backbone_msgs = 0;
    std::int64_t adhoc_msgs = 0;
    std::int64_t backbone_msg_cost = 0;
    std::int64_t adhoc_msg_cost = 0;
    std::int64_t total_cost_units = 0;
    std::int64_t backbone_units_direct = 0;
    std::int64_t shared_units = 0;
    std::int64_t adhoc_units = 0;
    double energy_spent = 0;

    std::map<InjectionKind, std::int64_t> injections_by_kind;
    std::int64_t injections_failed = 0;
    std::int64_t stale_pushes = 0;
    std::int64_t suppressed_pushes = 0;
    std::int64_t elections = 0;
    std::int64_t handovers = 0;

    double cpl_mean = 0;
    double cpl_final = 0;
    double efficiency_mean = 0;
    double efficiency_final = 0;
    double disconnected_pair_fraction_final = 0;
    double hybrid_cpl_final = 0;
    double hybrid_efficiency_final = 0;

    // baselines; filled by replaying the scenario in the two pure modes
    std::int64_t baseline_backbone_cost_units = 0;
    std::size_t baseline_backbone_unserved = 0;
    double baseline_adhoc_coverage = 0;
    std::size_t baseline_adhoc_unserved = 0;

    static std::string csv_header();
    std::string csv_row() const;
};

/// Reads the single data row of a metrics file back; throws ScenarioError on
/// format drift.
RunMetrics parse_metrics_csv(const std::string& text);

struct TickSample {
    SimTime time;
    std::size_t alive = 0;
    std::size_t cliques = 0;
    std::size_t injured = 0;
    std::size_t active_epidemics = 0;
    std::int64_t backbone_msgs = 0;  // cumulative
    std::int64_t adhoc_msgs = 0;
    double mean_age_s = 0;  // over held sought replicas, this tick
    double cpl = 0;         // sampled per metrics_sample_every; repeats between samples
    double efficiency = 0;
};

std::string timeseries_csv(const std::vector<TickSample>& samples);

}  // namespace injectsim
