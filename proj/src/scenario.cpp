#include "injectsim/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace injectsim {

using nlohmann::json;

const char* to_string(RunMode m) {
    switch (m) {
        case RunMode::Injection: return "injection";
        case RunMode::PureBackbone: return "pure_backbone";
        case RunMode::PureAdhoc: return "pure_adhoc";
    }
    return "?";
}

std::optional<RunMode> run_mode_from(const std::string& s) {
    if (s == "injection") return RunMode::Injection;
    if (s == "pure_backbone") return RunMode::PureBackbone;
    if (s == "pure_adhoc") return RunMode::PureAdhoc;
    return std::nullopt;
}

std::optional<std::pair<double, double>> requirement_profile(const std::string& name) {
    if (name == "business_traveler") return std::make_pair(30.0, 30.0);
    if (name == "tourist") return std::make_pair(300.0, 300.0);
    return std::nullopt;
}

const ItemSpec* Scenario::find_item(const std::string& item_id) const {
    for (const ServiceSpec& s : services)
        for (const ItemSpec& i : s.items)
            if (i.item_id == item_id) return &i;
    return nullptr;
}

const ServiceSpec* Scenario::find_service(const std::string& service_id) const {
    for (const ServiceSpec& s : services)
        if (s.service_id == service_id) return &s;
    return nullptr;
}

bool Scenario::operator==(const Scenario& o) const {
    return name == o.name && seed == o.seed && duration_s == o.duration_s && tick_s == o.tick_s &&
           bounds == o.bounds && mode == o.mode && pause_s == o.pause_s &&
           backbone_latency_s == o.backbone_latency_s && adhoc_latency_s == o.adhoc_latency_s &&
           registry_ttl_s == o.registry_ttl_s && dwell_horizon_s == o.dwell_horizon_s &&
           hysteresis == o.hysteresis && fanout == o.fanout &&
           metrics_sample_every == o.metrics_sample_every && weights == o.weights &&
           cost == o.cost && devices == o.devices && device_groups == o.device_groups &&
           services == o.services && requirements == o.requirements &&
           geo_fences == o.geo_fences && actions == o.actions;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ScenarioError("scenario: " + path + ": " + what);
}

const json* opt_key(const json& j, const std::string& path, const char* key) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

const json& need_key(const json& j, const std::string& path, const char* key) {
    const json* v = opt_key(j, path, key);
    if (!v) fail(path + "." + key, "missing required key");
    return *v;
}

double need_num(const json& j, const std::string& path, const char* key) {
    const json& v = need_key(j, path, key);
    if (!v.is_number()) fail(path + "." + key, "expected a number");
    return v.get<double>();
}

double opt_num(const json& j, const std::string& path, const char* key, double def) {
    const json* v = opt_key(j, path, key);
    if (!v) return def;
    if (!v->is_number()) fail(path + "." + key, "expected a number");
    return v->get<double>();
}

std::string need_str(const json& j, const std::string& path, const char* key) {
    const json& v = need_key(j, path, key);
    if (!v.is_string()) fail(path + "." + key, "expected a string");
    return v.get<std::string>();
}

bool opt_bool(const json& j, const std::string& path, const char* key, bool def) {
    const json* v = opt_key(j, path, key);
    if (!v) return def;
    if (!v->is_boolean()) fail(path + "." + key, "expected a boolean");
    return v->get<bool>();
}

Rect parse_rect(const json& j, const std::string& path) {
    Rect r;
    r.x = need_num(j, path, "x");
    r.y = need_num(j, path, "y");
    r.width = need_num(j, path, "width");
    r.height = need_num(j, path, "height");
    if (r.width <= 0 || r.height <= 0) fail(path, "width and height must be positive");
    return r;
}

std::set<std::string> parse_str_set(const json& j, const std::string& path, const char* key) {
    std::set<std::string> out;
    const json* v = opt_key(j, path, key);
    if (!v) return out;
    if (!v->is_array()) fail(path + "." + key, "expected an array of strings");
    for (const auto& e : *v) {
        if (!e.is_string()) fail(path + "." + key, "expected an array of strings");
        out.insert(e.get<std::string>());
    }
    return out;
}

RequirementSpec parse_requirement(const json& j, const std::string& path, bool needs_seeker) {
    RequirementSpec r;
    if (needs_seeker) r.seeker = static_cast<std::uint32_t>(need_num(j, path, "seeker"));
    r.item = need_str(j, path, "item");
    if (const json* p = opt_key(j, path, "profile")) {
        if (!p->is_string()) fail(path + ".profile", "expected a string");
        r.profile = p->get<std::string>();
        if (!requirement_profile(*r.profile)) fail(path + ".profile", "unknown profile '" + *r.profile + "'");
    }
    if (const json* v = opt_key(j, path, "max_age_s")) {
        if (!v->is_number()) fail(path + ".max_age_s", "expected a number");
        r.max_age_s = v->get<double>();
        if (*r.max_age_s <= 0) fail(path + ".max_age_s", "must be positive");
    }
    if (const json* v = opt_key(j, path, "max_wait_s")) {
        if (!v->is_number()) fail(path + ".max_wait_s", "expected a number");
        r.max_wait_s = v->get<double>();
        if (*r.max_wait_s <= 0) fail(path + ".max_wait_s", "must be positive");
    }
    if (!r.profile && !r.max_age_s) {
        fail(path, "needs either a profile or an explicit max_age_s");
    }
    return r;
}

ActionSpec::Op parse_op(const std::string& s, const std::string& path) {
    if (s == "register") return ActionSpec::Op::Register;
    if (s == "entity_driven") return ActionSpec::Op::EntityDriven;
    if (s == "clique_injection") return ActionSpec::Op::CliqueInjection;
    if (s == "spontaneous_backbone") return ActionSpec::Op::SpontaneousBackbone;
    if (s == "wormhole_direct") return ActionSpec::Op::WormholeDirect;
    if (s == "wormhole_mediated") return ActionSpec::Op::WormholeMediated;
    fail(path, "unknown op '" + s + "'");
}

const char* op_name(ActionSpec::Op op) {
    switch (op) {
        case ActionSpec::Op::Register: return "register";
        case ActionSpec::Op::EntityDriven: return "entity_driven";
        case ActionSpec::Op::CliqueInjection: return "clique_injection";
        case ActionSpec::Op::SpontaneousBackbone: return "spontaneous_backbone";
        case ActionSpec::Op::WormholeDirect: return "wormhole_direct";
        case ActionSpec::Op::WormholeMediated: return "wormhole_mediated";
    }
    return "?";
}

void validate(const Scenario& s) {
    if (s.name.empty()) fail("name", "must not be empty");
    if (s.duration_s < 0) fail("duration_s", "must be >= 0");
    if (s.tick_s <= 0) fail("tick_s", "must be positive");
    if (s.fanout < 1) fail("fanout", "must be >= 1");
    if (s.hysteresis < 0) fail("hysteresis", "must be >= 0");
    if (s.backbone_latency_s <= 0) fail("backbone_latency_s", "must be positive");
    if (s.adhoc_latency_s <= 0) fail("adhoc_latency_s", "must be positive");
    if (s.registry_ttl_s <= 0) fail("registry_ttl_s", "must be positive");
    if (s.dwell_horizon_s <= 0) fail("dwell_horizon_s", "must be positive");
    if (s.metrics_sample_every < 1) fail("metrics_sample_every", "must be >= 1");
    if (!s.weights.valid()) fail("weights", "must be non-negative and sum to 1");
    if (!s.cost.valid()) fail("cost", "needs backbone_msg > adhoc_msg > 0");

    std::set<std::uint32_t> ids;
    for (std::size_t i = 0; i < s.devices.size(); ++i) {
        const DeviceSpec& d = s.devices[i];
        const std::string path = "devices[" + std::to_string(i) + "]";
        if (!ids.insert(d.id).second) fail(path + ".id", "duplicate device id");
        if (!s.bounds.contains(d.position)) fail(path + ".position", "outside bounds");
        if (d.battery < 0 || d.battery > 1) fail(path + ".battery", "must be in [0,1]");
        if (d.equipment < 0 || d.equipment > 1) fail(path + ".equipment", "must be in [0,1]");
        if (d.range_m <= 0) fail(path + ".range_m", "must be positive");
        if (d.speed < 0) fail(path + ".speed", "must be >= 0");
        if (d.load < 0) fail(path + ".load", "must be >= 0");
        if (d.departure_s && *d.departure_s < d.arrival_s)
            fail(path + ".departure_s", "before arrival");
        for (const std::string& svc : d.registrations) {
            if (!s.find_service(svc)) fail(path + ".registrations", "unknown service '" + svc + "'");
        }
        for (const std::string& item : d.replicas) {
            const ItemSpec* spec = s.find_item(item);
            if (!spec) fail(path + ".replicas", "unknown item '" + item + "'");
            if (spec->produce_at_s.empty() || spec->produce_at_s.front() != 0)
                fail(path + ".replicas", "item '" + item + "' has no production at t=0 to seed");
        }
    }
    for (std::size_t i = 0; i < s.device_groups.size(); ++i) {
        const DeviceGroupSpec& g = s.device_groups[i];
        const std::string path = "device_groups[" + std::to_string(i) + "]";
        if (g.count < 1) fail(path + ".count", "must be >= 1");
        if (g.speed_min < 0 || g.speed_max < g.speed_min) fail(path + ".speed_range", "bad range");
        if (g.battery_min < 0 || g.battery_max > 1 || g.battery_max < g.battery_min)
            fail(path + ".battery_range", "bad range");
        if (g.range_m <= 0) fail(path + ".range_m", "must be positive");
        if (g.backbone_capable_fraction < 0 || g.backbone_capable_fraction > 1)
            fail(path + ".backbone_capable_fraction", "must be in [0,1]");
        for (const std::string& svc : g.registrations) {
            if (!s.find_service(svc)) fail(path + ".registrations", "unknown service '" + svc + "'");
        }
        for (std::size_t k = 0; k < g.requirements.size(); ++k) {
            const RequirementSpec& r = g.requirements[k];
            if (!s.find_item(r.item))
                fail(path + ".requirements[" + std::to_string(k) + "].item",
                     "unknown item '" + r.item + "'");
        }
    }

    std::set<std::string> item_ids;
    std::set<std::string> service_ids;
    for (std::size_t i = 0; i < s.services.size(); ++i) {
        const ServiceSpec& svc = s.services[i];
        const std::string path = "services[" + std::to_string(i) + "]";
        if (!service_ids.insert(svc.service_id).second)
            fail(path + ".service_id", "duplicate service id");
        for (std::size_t k = 0; k < svc.items.size(); ++k) {
            const ItemSpec& it = svc.items[k];
            const std::string ipath = path + ".items[" + std::to_string(k) + "]";
            if (!item_ids.insert(it.item_id).second) fail(ipath + ".item_id", "duplicate item id");
            if (it.max_staleness_s <= 0) fail(ipath + ".max_staleness_s", "must be positive");
            if (it.origin_device && !ids.count(*it.origin_device))
                fail(ipath + ".origin_device", "unknown device " + std::to_string(*it.origin_device));
            if (it.scope == Scope::CliqueLocal && !it.origin_device)
                fail(ipath + ".scope", "clique_local items need a device origin");
            if (it.spontaneous_upload && !it.origin_device)
                fail(ipath + ".spontaneous_upload", "only device-origin items upload spontaneously");
            if (!std::is_sorted(it.produce_at_s.begin(), it.produce_at_s.end()))
                fail(ipath + ".produce_at_s", "must be ascending");
            if (!it.produce_at_s.empty() && it.produce_at_s.front() < 0)
                fail(ipath + ".produce_at_s", "must be >= 0");
        }
    }

    for (std::size_t i = 0; i < s.requirements.size(); ++i) {
        const RequirementSpec& r = s.requirements[i];
        const std::string path = "requirements[" + std::to_string(i) + "]";
        if (!ids.count(r.seeker)) fail(path + ".seeker", "unknown device " + std::to_string(r.seeker));
        if (!s.find_item(r.item)) fail(path + ".item", "unknown item '" + r.item + "'");
    }
    for (std::size_t i = 0; i < s.geo_fences.size(); ++i) {
        const GeoFence& f = s.geo_fences[i];
        const std::string path = "geo_fences[" + std::to_string(i) + "]";
        if (!s.find_service(f.service_id)) fail(path + ".service_id", "unknown service '" + f.service_id + "'");
    }
    for (std::size_t i = 0; i < s.actions.size(); ++i) {
        const ActionSpec& a = s.actions[i];
        const std::string path = "actions[" + std::to_string(i) + "]";
        if (a.at_s < 0) fail(path + ".at_s", "must be >= 0");
        auto check_device = [&](std::optional<std::uint32_t> d, const char* key) {
            if (!d) fail(path + "." + key, std::string("required for op ") + op_name(a.op));
            if (!ids.count(*d)) fail(path + "." + key, "unknown device " + std::to_string(*d));
        };
        auto check_item = [&]() {
            if (a.item.empty()) fail(path + ".item", std::string("required for op ") + op_name(a.op));
            if (!s.find_item(a.item)) fail(path + ".item", "unknown item '" + a.item + "'");
        };
        switch (a.op) {
            case ActionSpec::Op::Register: {
                check_device(a.device, "device");
                if (a.service.empty()) fail(path + ".service", "required for op register");
                if (!s.find_service(a.service))
                    fail(path + ".service", "unknown service '" + a.service + "'");
                auto dev = std::find_if(s.devices.begin(), s.devices.end(),
                                        [&](const DeviceSpec& d) { return d.id == *a.device; });
                if (dev != s.devices.end() && !dev->backbone_capable)
                    fail(path + ".device", "registration needs a backbone-capable device");
                break;
            }
            case ActionSpec::Op::EntityDriven:
            case ActionSpec::Op::WormholeMediated:
                check_device(a.device, "device");
                check_item();
                break;
            case ActionSpec::Op::CliqueInjection:
                check_device(a.device, "device");
                check_item();
                break;
            case ActionSpec::Op::SpontaneousBackbone: {
                check_item();
                if (a.service.empty()) fail(path + ".service", "required for op spontaneous_backbone");
                const ServiceSpec* svc = s.find_service(a.service);
                if (!svc) fail(path + ".service", "unknown service '" + a.service + "'");
                bool owns = std::any_of(svc->items.begin(), svc->items.end(),
                                        [&](const ItemSpec& it) { return it.item_id == a.item; });
                if (!owns) fail(path + ".item", "item '" + a.item + "' not served by '" + a.service + "'");
                break;
            }
            case ActionSpec::Op::WormholeDirect:
                check_device(a.device, "device");
                check_device(a.target_device, "target_device");
                check_item();
                break;
        }
    }
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("scenario: syntax error: ") + e.what());
    }
    if (!j.is_object()) fail("$", "top level must be an object");

    Scenario s;
    s.name = need_str(j, "$", "name");
    s.seed = static_cast<std::uint64_t>(need_num(j, "$", "seed"));
    s.duration_s = need_num(j, "$", "duration_s");
    s.tick_s = opt_num(j, "$", "tick_s", 1.0);
    s.bounds = parse_rect(need_key(j, "$", "bounds"), "bounds");
    if (const json* m = opt_key(j, "$", "mode")) {
        if (!m->is_string()) fail("mode", "expected a string");
        auto mode = run_mode_from(m->get<std::string>());
        if (!mode) fail("mode", "unknown mode '" + m->get<std::string>() + "'");
        s.mode = *mode;
    }
    s.pause_s = opt_num(j, "$", "pause_s", s.pause_s);
    s.backbone_latency_s = opt_num(j, "$", "backbone_latency_s", s.backbone_latency_s);
    s.adhoc_latency_s = opt_num(j, "$", "adhoc_latency_s", s.adhoc_latency_s);
    s.registry_ttl_s = opt_num(j, "$", "registry_ttl_s", s.registry_ttl_s);
    s.dwell_horizon_s = opt_num(j, "$", "dwell_horizon_s", s.dwell_horizon_s);
    s.hysteresis = opt_num(j, "$", "hysteresis", s.hysteresis);
    s.fanout = static_cast<int>(opt_num(j, "$", "fanout", s.fanout));
    s.metrics_sample_every =
        static_cast<int>(opt_num(j, "$", "metrics_sample_every", s.metrics_sample_every));

    if (const json* w = opt_key(j, "$", "weights")) {
        s.weights.power = need_num(*w, "weights", "power");
        s.weights.dwell = need_num(*w, "weights", "dwell");
        s.weights.cluster = need_num(*w, "weights", "cluster");
        s.weights.load = need_num(*w, "weights", "load");
        s.weights.equipment = need_num(*w, "weights", "equipment");
    }
    if (const json* c = opt_key(j, "$", "cost")) {
        s.cost.backbone_msg_cost = static_cast<std::int64_t>(opt_num(*c, "cost", "backbone_msg", 100));
        s.cost.adhoc_msg_cost = static_cast<std::int64_t>(opt_num(*c, "cost", "adhoc_msg", 1));
        s.cost.backbone_energy = opt_num(*c, "cost", "backbone_energy", 1e-3);
        s.cost.adhoc_energy = opt_num(*c, "cost", "adhoc_energy", 1e-4);
    }

    if (const json* arr = opt_key(j, "$", "devices")) {
        if (!arr->is_array()) fail("devices", "expected an array");
        for (std::size_t i = 0; i < arr->size(); ++i) {
            const json& d = (*arr)[i];
            const std::string path = "devices[" + std::to_string(i) + "]";
            DeviceSpec spec;
            spec.id = static_cast<std::uint32_t>(need_num(d, path, "id"));
            const json& pos = need_key(d, path, "position");
            if (!pos.is_array() || pos.size() != 2 || !pos[0].is_number() || !pos[1].is_number())
                fail(path + ".position", "expected [x, y]");
            spec.position = {pos[0].get<double>(), pos[1].get<double>()};
            spec.speed = opt_num(d, path, "speed", 0);
            spec.mobile = opt_bool(d, path, "mobile", false);
            spec.battery = opt_num(d, path, "battery", 1.0);
            spec.range_m = opt_num(d, path, "range_m", 10.0);
            spec.backbone_capable = opt_bool(d, path, "backbone_capable", false);
            spec.equipment = opt_num(d, path, "equipment", 0.0);
            spec.load = static_cast<int>(opt_num(d, path, "load", 0));
            spec.arrival_s = opt_num(d, path, "arrival_s", 0);
            if (const json* dep = opt_key(d, path, "departure_s")) {
                if (!dep->is_number()) fail(path + ".departure_s", "expected a number");
                spec.departure_s = dep->get<double>();
            }
            spec.registrations = parse_str_set(d, path, "registrations");
            spec.replicas = parse_str_set(d, path, "replicas");
            s.devices.push_back(std::move(spec));
        }
    }

    if (const json* arr = opt_key(j, "$", "device_groups")) {
        if (!arr->is_array()) fail("device_groups", "expected an array");
        for (std::size_t i = 0; i < arr->size(); ++i) {
            const json& g = (*arr)[i];
            const std::string path = "device_groups[" + std::to_string(i) + "]";
            DeviceGroupSpec spec;
            spec.count = static_cast<int>(need_num(g, path, "count"));
            if (const json* r = opt_key(g, path, "speed_range")) {
                if (!r->is_array() || r->size() != 2) fail(path + ".speed_range", "expected [min, max]");
                spec.speed_min = (*r)[0].get<double>();
                spec.speed_max = (*r)[1].get<double>();
            }
            if (const json* r = opt_key(g, path, "battery_range")) {
                if (!r->is_array() || r->size() != 2)
                    fail(path + ".battery_range", "expected [min, max]");
                spec.battery_min = (*r)[0].get<double>();
                spec.battery_max = (*r)[1].get<double>();
            }
            spec.range_m = opt_num(g, path, "range_m", 10.0);
            spec.backbone_capable_fraction = opt_num(g, path, "backbone_capable_fraction", 0);
            spec.equipment = opt_num(g, path, "equipment", 0);
            spec.arrival_s = opt_num(g, path, "arrival_s", 0);
            if (const json* dep = opt_key(g, path, "departure_s")) {
                if (!dep->is_number()) fail(path + ".departure_s", "expected a number");
                spec.departure_s = dep->get<double>();
            }
            spec.registrations = parse_str_set(g, path, "registrations");
            if (const json* reqs = opt_key(g, path, "requirements")) {
                if (!reqs->is_array()) fail(path + ".requirements", "expected an array");
                for (std::size_t k = 0; k < reqs->size(); ++k) {
                    spec.requirements.push_back(parse_requirement(
                        (*reqs)[k], path + ".requirements[" + std::to_string(k) + "]", false));
                }
            }
            s.device_groups.push_back(std::move(spec));
        }
    }

    if (const json* arr = opt_key(j, "$", "services")) {
        if (!arr->is_array()) fail("services", "expected an array");
        for (std::size_t i = 0; i < arr->size(); ++i) {
            const json& v = (*arr)[i];
            const std::string path = "services[" + std::to_string(i) + "]";
            ServiceSpec svc;
            svc.service_id = need_str(v, path, "service_id");
            if (const json* items = opt_key(v, path, "items")) {
                if (!items->is_array()) fail(path + ".items", "expected an array");
                for (std::size_t k = 0; k < items->size(); ++k) {
                    const json& it = (*items)[k];
                    const std::string ipath = path + ".items[" + std::to_string(k) + "]";
                    ItemSpec item;
                    item.item_id = need_str(it, ipath, "item_id");
                    if (const json* od = opt_key(it, ipath, "origin_device")) {
                        if (!od->is_number()) fail(ipath + ".origin_device", "expected a number");
                        item.origin_device = od->get<std::uint32_t>();
                    }
                    item.max_staleness_s = opt_num(it, ipath, "max_staleness_s", 60);
                    if (const json* p = opt_key(it, ipath, "priority")) {
                        const std::string ps = p->get<std::string>();
                        if (ps == "low") item.priority = Priority::Low;
                        else if (ps == "normal") item.priority = Priority::Normal;
                        else if (ps == "high") item.priority = Priority::High;
                        else fail(ipath + ".priority", "unknown priority '" + ps + "'");
                    }
                    if (const json* sc = opt_key(it, ipath, "scope")) {
                        const std::string ss = sc->get<std::string>();
                        if (ss == "global") item.scope = Scope::Global;
                        else if (ss == "clique_local") item.scope = Scope::CliqueLocal;
                        else fail(ipath + ".scope", "unknown scope '" + ss + "'");
                    }
                    if (const json* pr = opt_key(it, ipath, "produce_at_s")) {
                        if (!pr->is_array()) fail(ipath + ".produce_at_s", "expected an array");
                        for (const auto& e : *pr) item.produce_at_s.push_back(e.get<double>());
                    }
                    item.spontaneous_upload = opt_bool(it, ipath, "spontaneous_upload", false);
                    svc.items.push_back(std::move(item));
                }
            }
            s.services.push_back(std::move(svc));
        }
    }

    if (const json* arr = opt_key(j, "$", "requirements")) {
        if (!arr->is_array()) fail("requirements", "expected an array");
        for (std::size_t i = 0; i < arr->size(); ++i) {
            s.requirements.push_back(
                parse_requirement((*arr)[i], "requirements[" + std::to_string(i) + "]", true));
        }
    }

    if (const json* arr = opt_key(j, "$", "geo_fences")) {
        if (!arr->is_array()) fail("geo_fences", "expected an array");
        for (std::size_t i = 0; i < arr->size(); ++i) {
            const json& f = (*arr)[i];
            const std::string path = "geo_fences[" + std::to_string(i) + "]";
            GeoFence fence;
            fence.service_id = need_str(f, path, "service_id");
            fence.area = parse_rect(f, path);
            s.geo_fences.push_back(std::move(fence));
        }
    }

    if (const json* arr = opt_key(j, "$", "actions")) {
        if (!arr->is_array()) fail("actions", "expected an array");
        for (std::size_t i = 0; i < arr->size(); ++i) {
            const json& a = (*arr)[i];
            const std::string path = "actions[" + std::to_string(i) + "]";
            ActionSpec act;
            act.at_s = need_num(a, path, "at_s");
            act.op = parse_op(need_str(a, path, "op"), path + ".op");
            if (const json* d = opt_key(a, path, "device"))
                act.device = d->get<std::uint32_t>();
            if (const json* d = opt_key(a, path, "target_device"))
                act.target_device = d->get<std::uint32_t>();
            if (const json* v = opt_key(a, path, "item")) act.item = v->get<std::string>();
            if (const json* v = opt_key(a, path, "service")) act.service = v->get<std::string>();
            act.forced = opt_bool(a, path, "forced", false);
            s.actions.push_back(std::move(act));
        }
    }

    validate(s);
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("scenario: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string render_scenario(const Scenario& s) {
    json j;
    j["name"] = s.name;
    j["seed"] = s.seed;
    j["duration_s"] = s.duration_s;
    j["tick_s"] = s.tick_s;
    j["bounds"] = {{"x", s.bounds.x}, {"y", s.bounds.y}, {"width", s.bounds.width},
                   {"height", s.bounds.height}};
    j["mode"] = to_string(s.mode);
    j["pause_s"] = s.pause_s;
    j["backbone_latency_s"] = s.backbone_latency_s;
    j["adhoc_latency_s"] = s.adhoc_latency_s;
    j["registry_ttl_s"] = s.registry_ttl_s;
    j["dwell_horizon_s"] = s.dwell_horizon_s;
    j["hysteresis"] = s.hysteresis;
    j["fanout"] = s.fanout;
    j["metrics_sample_every"] = s.metrics_sample_every;
    j["weights"] = {{"power", s.weights.power}, {"dwell", s.weights.dwell},
                    {"cluster", s.weights.cluster}, {"load", s.weights.load},
                    {"equipment", s.weights.equipment}};
    j["cost"] = {{"backbone_msg", s.cost.backbone_msg_cost}, {"adhoc_msg", s.cost.adhoc_msg_cost},
                 {"backbone_energy", s.cost.backbone_energy},
                 {"adhoc_energy", s.cost.adhoc_energy}};

    j["devices"] = json::array();
    for (const DeviceSpec& d : s.devices) {
        json v;
        v["id"] = d.id;
        v["position"] = {d.position.x, d.position.y};
        v["speed"] = d.speed;
        v["mobile"] = d.mobile;
        v["battery"] = d.battery;
        v["range_m"] = d.range_m;
        v["backbone_capable"] = d.backbone_capable;
        v["equipment"] = d.equipment;
        v["load"] = d.load;
        v["arrival_s"] = d.arrival_s;
        if (d.departure_s) v["departure_s"] = *d.departure_s;
        if (!d.registrations.empty()) v["registrations"] = d.registrations;
        if (!d.replicas.empty()) v["replicas"] = d.replicas;
        j["devices"].push_back(std::move(v));
    }

    auto render_req = [](const RequirementSpec& r, bool with_seeker) {
        json v;
        if (with_seeker) v["seeker"] = r.seeker;
        v["item"] = r.item;
        if (r.profile) v["profile"] = *r.profile;
        if (r.max_age_s) v["max_age_s"] = *r.max_age_s;
        if (r.max_wait_s) v["max_wait_s"] = *r.max_wait_s;
        return v;
    };

    if (!s.device_groups.empty()) {
        j["device_groups"] = json::array();
        for (const DeviceGroupSpec& g : s.device_groups) {
            json v;
            v["count"] = g.count;
            v["speed_range"] = {g.speed_min, g.speed_max};
            v["battery_range"] = {g.battery_min, g.battery_max};
            v["range_m"] = g.range_m;
            v["backbone_capable_fraction"] = g.backbone_capable_fraction;
            v["equipment"] = g.equipment;
            v["arrival_s"] = g.arrival_s;
            if (g.departure_s) v["departure_s"] = *g.departure_s;
            if (!g.registrations.empty()) v["registrations"] = g.registrations;
            if (!g.requirements.empty()) {
                v["requirements"] = json::array();
                for (const RequirementSpec& r : g.requirements)
                    v["requirements"].push_back(render_req(r, false));
            }
            j["device_groups"].push_back(std::move(v));
        }
    }

    j["services"] = json::array();
    for (const ServiceSpec& svc : s.services) {
        json v;
        v["service_id"] = svc.service_id;
        v["items"] = json::array();
        for (const ItemSpec& it : svc.items) {
            json w;
            w["item_id"] = it.item_id;
            if (it.origin_device) w["origin_device"] = *it.origin_device;
            w["max_staleness_s"] = it.max_staleness_s;
            w["priority"] = to_string(it.priority);
            w["scope"] = to_string(it.scope);
            w["produce_at_s"] = it.produce_at_s;
            w["spontaneous_upload"] = it.spontaneous_upload;
            v["items"].push_back(std::move(w));
        }
        j["services"].push_back(std::move(v));
    }

    if (!s.requirements.empty()) {
        j["requirements"] = json::array();
        for (const RequirementSpec& r : s.requirements)
            j["requirements"].push_back(render_req(r, true));
    }
    if (!s.geo_fences.empty()) {
        j["geo_fences"] = json::array();
        for (const GeoFence& f : s.geo_fences) {
            j["geo_fences"].push_back({{"service_id", f.service_id}, {"x", f.area.x},
                                       {"y", f.area.y}, {"width", f.area.width},
                                       {"height", f.area.height}});
        }
    }
    if (!s.actions.empty()) {
        j["actions"] = json::array();
        for (const ActionSpec& a : s.actions) {
            json v;
            v["at_s"] = a.at_s;
            v["op"] = op_name(a.op);
            if (a.device) v["device"] = *a.device;
            if (a.target_device) v["target_device"] = *a.target_device;
            if (!a.item.empty()) v["item"] = a.item;
            if (!a.service.empty()) v["service"] = a.service;
            if (a.forced) v["forced"] = true;
            j["actions"].push_back(std::move(v));
        }
    }
    return j.dump(2) + "\n";
}

}  // namespace injectsim
