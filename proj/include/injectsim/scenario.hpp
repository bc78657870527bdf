#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "injectsim/consistency.hpp"
#include "injectsim/cost.hpp"
#include "injectsim/election.hpp"

namespace injectsim {

enum class RunMode { Injection, PureBackbone, PureAdhoc };
const char* to_string(RunMode m);
std::optional<RunMode> run_mode_from(const std::string& s);

/// Explicit device spec. Group-spawned devices share one DeviceGroupSpec and
/// get concrete ids and positions at run start from the effective seed.
struct DeviceSpec {
    std::uint32_t id = 0;
    Vec2 position{};
    double speed = 0;
    bool mobile = false;            // random-waypoint when true
    double battery = 1.0;
    double range_m = 10.0;
    bool backbone_capable = false;
    double equipment = 0.0;
    int load = 0;
    double arrival_s = 0;
    std::optional<double> departure_s;
    std::set<std::string> registrations;
    std::set<std::string> replicas;  // items whose t=0 version this device holds

    bool operator==(const DeviceSpec&) const = default;
};

struct RequirementSpec {
    std::uint32_t seeker = 0;
    std::string item;
    std::optional<std::string> profile;  // business_traveler | tourist
    std::optional<double> max_age_s;     // explicit override
    std::optional<double> max_wait_s;

    bool operator==(const RequirementSpec&) const = default;
};

struct DeviceGroupSpec {
    int count = 0;
    double speed_min = 0;
    double speed_max = 0;
    double battery_min = 1.0;
    double battery_max = 1.0;
    double range_m = 10.0;
    double backbone_capable_fraction = 0;  // rounded-down share of the group
    double equipment = 0.0;
    double arrival_s = 0;
    std::optional<double> departure_s;
    std::set<std::string> registrations;
    std::vector<RequirementSpec> requirements;  // applied per spawned device (seeker ignored)

    bool operator==(const DeviceGroupSpec&) const = default;
};

struct ItemSpec {
    std::string item_id;
    std::optional<std::uint32_t> origin_device;  // nullopt: backbone authority
    double max_staleness_s = 60;
    Priority priority = Priority::Normal;
    Scope scope = Scope::Global;
    std::vector<double> produce_at_s;  // sorted ascending
    bool spontaneous_upload = false;   // device-origin: clique injection after production

    bool operator==(const ItemSpec&) const = default;
};

struct ServiceSpec {
    std::string service_id;
    std::vector<ItemSpec> items;

    bool operator==(const ServiceSpec&) const = default;
};

struct GeoFence {
    std::string service_id;
    Rect area;

    bool operator==(const GeoFence&) const = default;
};

/// Scripted protocol operation at a fixed time.
struct ActionSpec {
    enum class Op {
        Register,
        EntityDriven,
        CliqueInjection,       // spontaneous or forced
        SpontaneousBackbone,
        WormholeDirect,
        WormholeMediated,
    };
    double at_s = 0;
    Op op = Op::Register;
    std::optional<std::uint32_t> device;         // acting / addressed device
    std::optional<std::uint32_t> target_device;  // wormhole target side
    std::string item;
    std::string service;
    bool forced = false;

    bool operator==(const ActionSpec&) const = default;
};

struct Scenario {
    std::string name;
    std::uint64_t seed = 0;
    double duration_s = 0;
    double tick_s = 1.0;
    Rect bounds{0, 0, 100, 100};
    RunMode mode = RunMode::Injection;

    double pause_s = 2.0;             // random-waypoint pause
    double backbone_latency_s = 0.5;  // per backbone hop
    double adhoc_latency_s = 0.05;    // per ad-hoc hop, shifts replica receipt only
    double registry_ttl_s = 300;
    double dwell_horizon_s = 600;
    double hysteresis = 0.15;
    int fanout = 3;
    int metrics_sample_every = 1;     // graph metrics cadence, in ticks

    ScoreWeights weights;
    CostModel cost;

    std::vector<DeviceSpec> devices;
    std::vector<DeviceGroupSpec> device_groups;
    std::vector<ServiceSpec> services;
    std::vector<RequirementSpec> requirements;
    std::vector<GeoFence> geo_fences;
    std::vector<ActionSpec> actions;

    const ItemSpec* find_item(const std::string& item_id) const;
    const ServiceSpec* find_service(const std::string& service_id) const;

    bool operator==(const Scenario&) const;
};

/// Parses and fully validates; every failure names the offending key (JSON
/// path; line/column for syntax errors).
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Canonical JSON form; parse(render(s)) == s.
std::string render_scenario(const Scenario& s);

/// Requirement presets: 30 s for a business traveler, 300 s for a tourist.
std::optional<std::pair<double, double>> requirement_profile(const std::string& name);

}  // namespace injectsim
