#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "injectsim/cost.hpp"
#include "injectsim/epidemic.hpp"
#include "injectsim/event_queue.hpp"
#include "injectsim/graph_metrics.hpp"
#include "injectsim/injection.hpp"
#include "injectsim/metrics.hpp"
#include "injectsim/scenario.hpp"
#include "injectsim/trace.hpp"

namespace injectsim {

struct RunResult {
    std::string trace;
    RunMetrics metrics;
    std::vector<TickSample> timeseries;
};

/// Single-threaded deterministic event loop owning all protocol state. One
/// engine = one run; independent runs share nothing and may execute on
/// different threads.
class SimEngine {
public:
    SimEngine(Scenario scenario, std::optional<std::uint64_t> seed_override = std::nullopt,
              std::optional<RunMode> mode_override = std::nullopt);

    /// Runs to the scenario duration and finalizes metrics.
    RunResult run();

    /// Step API for tests: processes all events up to and including `until`.
    void run_until(SimTime until);
    RunMetrics finalize();

    // --- protocol operations (advance only inside the event loop; callers
    // outside a tick context are test drivers) ---
    std::uint32_t backbone_injection_requested(CliqueId clique, const std::string& item_id);
    std::vector<std::uint32_t> backbone_injection_spontaneous(const std::string& service_id,
                                                              const std::string& item_id);
    std::uint32_t entity_driven_injection(DeviceId device, const std::string& item_id);
    std::uint32_t clique_injection(DeviceId member, const std::string& item_id, bool forced);
    std::uint32_t wormhole_direct(DeviceId source_member, DeviceId target_member,
                                  const std::string& item_id);
    std::uint32_t wormhole_mediated(DeviceId requesting_member, const std::string& item_id);
    void register_device(DeviceId device, const std::string& service_id, bool automatic);

    // --- introspection for tests and bindings ---
    SimTime now() const { return queue_.now(); }
    const std::vector<Device>& devices() const { return devices_; }
    const AdHocTopology& topology() const { return topology_; }
    const std::vector<Clique>& cliques() const { return cliques_; }
    const BackboneService& backbone() const { return backbone_; }
    const ReplicaTable& replicas() const { return replicas_; }
    const std::vector<InjectionEvent>& events() const { return events_; }
    const InjectionEvent& event(std::uint32_t id) const { return events_.at(id); }
    const CostLedger& ledger() const { return ledger_; }
    const std::vector<ConsistencyRequirement>& requirements() const { return requirements_; }
    const std::vector<std::unique_ptr<Dissemination>>& epidemics() const { return epidemics_; }
    std::string trace_text() const { return trace_stream_.str(); }
    const Scenario& scenario() const { return scenario_; }
    RunMode mode() const { return mode_; }
    std::uint64_t effective_seed() const { return seed_; }
    const Clique* clique_of_device(DeviceId d) const;

private:
    struct EvTick {};
    struct EvProduce { std::string item_id; };
    struct EvAction { ActionSpec action; };
    struct EvRequestArrive { std::uint32_t event_id; };
    struct EvDeliverArrive { std::uint32_t event_id; DeviceId target; InformationItem item; };
    struct EvUploadArrive { std::uint32_t event_id; InformationItem item; bool transient; };
    struct EvForceArrive { std::uint32_t event_id; DeviceId addressee; bool transient; };
    struct EvErrorArrive { std::uint32_t event_id; InjectionStatus status; };
    struct EvWormholeTimeout { std::uint32_t event_id; };
    using Event = std::variant<EvTick, EvProduce, EvAction, EvRequestArrive, EvDeliverArrive,
                               EvUploadArrive, EvForceArrive, EvErrorArrive, EvWormholeTimeout>;

    // setup
    void expand_devices();
    void build_catalog();
    void seed_initial_replicas();
    void schedule_static_events();

    // tick pipeline
    void on_tick();
    void apply_arrivals_departures();
    void refresh_world();
    void maintain_injection_points();
    void auto_register_geofences();
    void advance_epidemics();
    void check_and_trigger();
    void purge_suppression();
    void sample_metrics();

    // event handlers
    void dispatch(SimTime t, Event ev);
    void on_produce(const std::string& item_id);
    void on_action(const ActionSpec& a);
    void on_request_arrive(std::uint32_t event_id);
    void on_deliver_arrive(std::uint32_t event_id, DeviceId target, const InformationItem& item);
    void on_upload_arrive(std::uint32_t event_id, const InformationItem& item, bool transient);
    void on_force_arrive(std::uint32_t event_id, DeviceId addressee, bool transient);
    void on_wormhole_timeout(std::uint32_t event_id);

    // shared protocol machinery
    InjectionEvent& new_event(InjectionKind kind, std::optional<DeviceId> initiator,
                              const std::string& item_id);
    void fail_event(std::uint32_t event_id, InjectionStatus status);
    void finalize_event(std::uint32_t event_id, InjectionStatus status);
    std::optional<DeviceId> ensure_injection_point(Clique& clique);
    void emit_message(SimTime t, MsgKind kind, Hop hop, std::optional<DeviceId> sender,
                      std::optional<DeviceId> receiver, const std::string& item_id,
                      std::uint32_t version, std::optional<Scope> scope,
                      std::optional<std::uint32_t> event_id, bool bill_direct = false);
    void deliver_replica(DeviceId holder, const InformationItem& item, SimTime received_at,
                         std::optional<DeviceId> by, std::optional<std::uint32_t> event_id);
    void start_dissemination(DeviceId seed_device, const InformationItem& item,
                             std::optional<std::uint32_t> event_id);
    std::set<DeviceId> immune_set(const std::string& item_id, std::uint32_t version) const;
    std::vector<DeviceId> seekers_in_clique(const Clique& clique, const std::string& item_id) const;
    std::optional<DeviceId> registered_contact(const Clique& clique) const;
    std::uint32_t clique_version(const Clique& clique, const std::string& item_id) const;
    const InformationItem* catalog_item(const std::string& item_id) const;
    InformationItem authority_snapshot(const std::string& item_id, std::uint32_t version) const;
    void recompute_loads();
    double mean_seeker_age(SimTime now) const;
    SimTime backbone_hop() const { return SimTime::from_seconds(scenario_.backbone_latency_s); }

    Scenario scenario_;
    std::uint64_t seed_;
    RunMode mode_;
    SimTime duration_;
    SimTime tick_;

    EventQueue<Event> queue_;
    std::vector<Device> devices_;  // sorted by id
    AdHocTopology topology_;
    std::vector<Clique> cliques_;
    BackboneService backbone_;
    ReplicaTable replicas_;
    std::vector<ConsistencyRequirement> requirements_;
    std::vector<InjectionEvent> events_;  // event_id indexes this
    std::vector<std::unique_ptr<Dissemination>> epidemics_;
    CostLedger ledger_;

    // authority catalog: current version and properties per item
    struct AuthorityState {
        ItemSpec spec;
        std::string service_id;
        std::uint32_t version = 0;
        SimTime produced_at;
    };
    std::map<std::string, AuthorityState> catalog_;

    // (clique, item) pairs with an injection in flight or disseminating
    std::map<std::pair<CliqueId, std::string>, std::uint32_t> suppression_;
    // pure-backbone mode: per-seeker in-flight fetches
    std::set<std::pair<DeviceId, std::string>> fetch_in_flight_;
    std::map<std::pair<DeviceId, std::size_t>, bool> fence_inside_;  // (device, fence idx)

    std::ostringstream trace_stream_;
    TraceWriter trace_;
    Rng mobility_rng_;
    Rng gossip_rng_;
    Rng spawn_rng_;

    std::uint64_t ticks_done_ = 0;
    std::uint32_t next_handle_ = 0;
    std::int64_t backbone_msgs_ = 0;
    std::int64_t adhoc_msgs_ = 0;
    std::int64_t stale_pushes_ = 0;
    std::int64_t elections_ = 0;
    std::int64_t handovers_ = 0;
    std::size_t injured_this_tick_ = 0;
    double staleness_weighted_sum_ = 0;
    std::uint64_t staleness_samples_ = 0;
    std::vector<TickSample> timeseries_;
    GraphMetrics last_graph_;
    GraphMetrics last_hybrid_;
    bool graph_sampled_ = false;
    std::vector<double> cpl_samples_;
    std::vector<double> eff_samples_;
    bool finalized_ = false;
};

/// Replays the scenario with every interested, backbone-capable device
/// fetching individually; reports total cost and unserved seekers.
struct BackboneBaseline {
    std::int64_t cost_units = 0;
    std::size_t unserved = 0;
};
BackboneBaseline baseline_pure_backbone(const Scenario& scenario, std::uint64_t seed);

/// Replays with the backbone disabled; reports coverage of what ad-hoc
/// dissemination alone could satisfy and the requirements it never could.
struct AdhocBaseline {
    double coverage = 0;
    std::size_t unserved = 0;
};
AdhocBaseline baseline_pure_adhoc(const Scenario& scenario, std::uint64_t seed);

/// Full run plus baseline replays folded into the metrics row.
RunResult run_with_baselines(const Scenario& scenario,
                             std::optional<std::uint64_t> seed_override = std::nullopt,
                             std::optional<RunMode> mode_override = std::nullopt,
                             bool with_baselines = true);

}  // namespace injectsim
