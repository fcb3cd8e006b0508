#include "hapdc/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "hapdc/errors.hpp"
#include "json.hpp"

namespace hapdc {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& source, const std::string& msg) {
    throw config_error(source + ": " + msg);
}

std::string line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

std::string joined(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

double as_num(const ordered_json& v, const std::string& key, const std::string& source) {
    if (!v.is_number()) fail(source, "key '" + key + "': expected a number");
    return v.get<double>();
}

int as_int(const ordered_json& v, const std::string& key, const std::string& source) {
    if (!v.is_number_integer()) fail(source, "key '" + key + "': expected an integer");
    return v.get<int>();
}

bool as_bool(const ordered_json& v, const std::string& key, const std::string& source) {
    if (!v.is_boolean()) fail(source, "key '" + key + "': expected a boolean");
    return v.get<bool>();
}

std::string as_str(const ordered_json& v, const std::string& key, const std::string& source) {
    if (!v.is_string()) fail(source, "key '" + key + "': expected a string");
    return v.get<std::string>();
}

const ordered_json& as_obj(const ordered_json& v, const std::string& key,
                           const std::string& source) {
    if (!v.is_object()) fail(source, "key '" + key + "': expected an object");
    return v;
}

void apply_geo(const ordered_json& j, GeoDay& geo, const std::string& path,
               const std::string& source) {
    for (const auto& [key, val] : j.items()) {
        const std::string p = joined(path, key);
        if (key == "latitude_deg") {
            geo.latitude_deg = as_num(val, p, source);
        } else if (key == "day_of_year") {
            geo.day_of_year = as_int(val, p, source);
        } else {
            fail(source, "unknown key '" + p + "'");
        }
    }
}

void apply_server(const ordered_json& j, ServerSpec& s, const std::string& path,
                  const std::string& source) {
    for (const auto& [key, val] : j.items()) {
        const std::string p = joined(path, key);
        if (key == "service_rate_mips") {
            s.service_rate_mips = as_num(val, p, source);
        } else if (key == "peak_power_w") {
            s.peak_power_w = as_num(val, p, source);
        } else if (key == "idle_fraction") {
            s.idle_fraction = as_num(val, p, source);
        } else if (key == "mass_kg") {
            s.mass_kg = as_num(val, p, source);
        } else {
            fail(source, "unknown key '" + p + "'");
        }
    }
}

TaskClass parse_task_class(const std::string& v, const std::string& path,
                           const std::string& source) {
    if (v == "short") return TaskClass::short_tasks;
    if (v == "long") return TaskClass::long_tasks;
    fail(source, "key '" + path + "': expected \"short\" or \"long\"");
}

void apply_workload(const ordered_json& j, WorkloadSpec& w, const std::string& path,
                    const std::string& source) {
    for (const auto& [key, val] : j.items()) {
        const std::string p = joined(path, key);
        if (key == "arrival_rate") {
            w.arrival_rate = as_num(val, p, source);
        } else if (key == "mean_task_length_mi") {
            w.mean_task_length_mi = as_num(val, p, source);
        } else if (key == "task_size_bits") {
            w.task_size_bits = as_num(val, p, source);
        } else if (key == "task_class") {
            w.task_class = parse_task_class(as_str(val, p, source), p, source);
        } else {
            fail(source, "unknown key '" + p + "'");
        }
    }
}

void apply_pv(const ordered_json& j, PvConfig& pv, const std::string& path,
              const std::string& source) {
    for (const auto& [key, val] : j.items()) {
        const std::string p = joined(path, key);
        if (key == "area_m2") {
            pv.area_m2 = as_num(val, p, source);
        } else if (key == "efficiency") {
            pv.efficiency = as_num(val, p, source);
        } else if (key == "transmittance") {
            pv.transmittance = as_num(val, p, source);
        } else {
            fail(source, "unknown key '" + p + "'");
        }
    }
}

void apply_hap(const ordered_json& j, HapConfig& h, const std::string& path,
               const std::string& source) {
    for (const auto& [key, val] : j.items()) {
        const std::string p = joined(path, key);
        if (key == "max_payload_kg") {
            h.max_payload_kg = as_num(val, p, source);
        } else if (key == "pv") {
            apply_pv(as_obj(val, p, source), h.pv, p, source);
        } else if (key == "propeller_efficiency") {
            h.propeller_efficiency = as_num(val, p, source);
        } else if (key == "battery_kwh_per_kg") {
            h.battery_kwh_per_kg = as_num(val, p, source);
        } else if (key == "battery_mass_kg") {
            h.battery_mass_kg = as_num(val, p, source);
        } else if (key == "drag_area_m2") {
            h.drag_area_m2 = as_num(val, p, source);
        } else if (key == "wind_speed_mps") {
            h.wind_speed_mps = as_num(val, p, source);
        } else if (key == "air_density_kg_m3") {
            h.air_density_kg_m3 = as_num(val, p, source);
        } else if (key == "depth_of_discharge") {
            h.depth_of_discharge = as_num(val, p, source);
        } else if (key == "harvest_derating") {
            h.harvest_derating = as_num(val, p, source);
        } else if (key == "comm_power_w") {
            h.comm_power_w = as_num(val, p, source);
        } else if (key == "stability_cap") {
            h.stability_cap = as_num(val, p, source);
        } else {
            fail(source, "unknown key '" + p + "'");
        }
    }
}

void apply_link(const ordered_json& j, LinkConfig& l, const std::string& path,
                const std::string& source) {
    for (const auto& [key, val] : j.items()) {
        const std::string p = joined(path, key);
        if (key == "carrier_hz") {
            l.carrier_hz = as_num(val, p, source);
        } else if (key == "bandwidth_hz") {
            l.bandwidth_hz = as_num(val, p, source);
        } else if (key == "tx_antennas") {
            l.tx_antennas = as_int(val, p, source);
        } else if (key == "rx_antennas") {
            l.rx_antennas = as_int(val, p, source);
        } else if (key == "tx_power_dbm") {
            l.tx_power_dbm = as_num(val, p, source);
        } else if (key == "noise_figure_db") {
            l.noise_figure_db = as_num(val, p, source);
        } else if (key == "distance_m") {
            l.distance_m = as_num(val, p, source);
        } else if (key == "per_hop_distance_m") {
            l.per_hop_distance_m = as_num(val, p, source);
        } else {
            fail(source, "unknown key '" + p + "'");
        }
    }
}

void apply_thermal(const ordered_json& j, ThermalParams& t, const std::string& path,
                   const std::string& source) {
    for (const auto& [key, val] : j.items()) {
        const std::string p = joined(path, key);
        if (key == "supply_temp_k") {
            t.supply_temp_k = as_num(val, p, source);
        } else if (key == "server_init_k") {
            t.server_init_k = as_num(val, p, source);
        } else if (key == "cpu_init_k") {
            t.cpu_init_k = as_num(val, p, source);
        } else if (key == "resistance_k_per_w") {
            t.resistance_k_per_w = as_num(val, p, source);
        } else if (key == "capacity_j_per_k") {
            t.capacity_j_per_k = as_num(val, p, source);
        } else if (key == "cooling_overhead") {
            t.cooling_overhead = as_num(val, p, source);
        } else if (key == "cpu_limit_k") {
            t.cpu_limit_k = as_num(val, p, source);
        } else {
            fail(source, "unknown key '" + p + "'");
        }
    }
}

void apply_cost(const ordered_json& j, CostModel& c, const std::string& path,
                const std::string& source) {
    for (const auto& [key, val] : j.items()) {
        const std::string p = joined(path, key);
        if (key == "electricity_price_per_kwh") {
            c.electricity_price_per_kwh = as_num(val, p, source);
        } else if (key == "include_transmission_cost") {
            c.include_transmission_cost = as_bool(val, p, source);
        } else {
            fail(source, "unknown key '" + p + "'");
        }
    }
}

void apply_scenario(const ordered_json& j, Scenario& sc, const std::string& path,
                    const std::string& source) {
    for (const auto& [key, val] : j.items()) {
        const std::string p = joined(path, key);
        if (key == "kind") {
            const std::string v = as_str(val, p, source);
            if (v == "terrestrial") {
                sc.kind = ScenarioKind::terrestrial_only;
            } else if (v == "single_hap") {
                sc.kind = ScenarioKind::single_hap;
            } else if (v == "multi_hap") {
                sc.kind = ScenarioKind::multi_hap;
            } else {
                fail(source,
                     "key '" + p + "': expected \"terrestrial\", \"single_hap\" or \"multi_hap\"");
            }
        } else if (key == "hap_count") {
            sc.hap_count = as_int(val, p, source);
        } else if (key == "airborne_servers_per_hap") {
            sc.airborne_servers_per_hap = as_int(val, p, source);
        } else if (key == "terrestrial_servers") {
            sc.terrestrial_servers = as_int(val, p, source);
        } else if (key == "control") {
            const std::string v = as_str(val, p, source);
            if (v == "centralized") {
                sc.control = ControlMode::centralized;
            } else if (v == "distributed") {
                sc.control = ControlMode::distributed;
            } else {
                fail(source, "key '" + p + "': expected \"centralized\" or \"distributed\"");
            }
        } else if (key == "terrestrial_fraction") {
            sc.terrestrial_fraction = as_num(val, p, source);
        } else if (key == "offered_policy") {
            const std::string v = as_str(val, p, source);
            if (v == "fixed") {
                sc.offered_policy = OfferedPolicy::fixed;
            } else if (v == "max_rate") {
                sc.offered_policy = OfferedPolicy::max_rate;
            } else {
                fail(source, "key '" + p + "': expected \"fixed\" or \"max_rate\"");
            }
        } else if (key == "controller_response_s") {
            sc.controller_response_s = as_num(val, p, source);
        } else if (key == "coordination_overhead_s") {
            sc.coordination_overhead_s = as_num(val, p, source);
        } else {
            fail(source, "unknown key '" + p + "'");
        }
    }
}

void apply_delay_class(const ordered_json& j, DelayClassSpec& cls, const std::string& path,
                       const std::string& source) {
    for (const auto& [key, val] : j.items()) {
        const std::string p = joined(path, key);
        if (key == "mean_task_length_mi") {
            cls.workload.mean_task_length_mi = as_num(val, p, source);
        } else if (key == "task_size_bits") {
            cls.workload.task_size_bits = as_num(val, p, source);
        } else {
            fail(source, "unknown key '" + p + "'");
        }
    }
}

void apply_delay(const ordered_json& j, DelayStudy& d, const std::string& path,
                 const std::string& source) {
    for (const auto& [key, val] : j.items()) {
        const std::string p = joined(path, key);
        if (key == "rho_min") {
            d.rho_min = as_num(val, p, source);
        } else if (key == "rho_max") {
            d.rho_max = as_num(val, p, source);
        } else if (key == "rho_step") {
            d.rho_step = as_num(val, p, source);
        } else if (key == "short") {
            apply_delay_class(as_obj(val, p, source), d.short_class, p, source);
        } else if (key == "long") {
            apply_delay_class(as_obj(val, p, source), d.long_class, p, source);
        } else {
            fail(source, "unknown key '" + p + "'");
        }
    }
}

void apply_root(const ordered_json& j, RunConfig& cfg, const std::string& source) {
    if (!j.is_object()) {
        fail(source, "top level must be an object");
    }
    for (const auto& [key, val] : j.items()) {
        if (key == "seed") {
            if (!val.is_number_unsigned()) {
                fail(source, "key 'seed': expected a non-negative integer");
            }
            cfg.seed = val.get<std::uint64_t>();
        } else if (key == "geo") {
            apply_geo(as_obj(val, key, source), cfg.sys.geo, key, source);
        } else if (key == "server") {
            apply_server(as_obj(val, key, source), cfg.sys.server, key, source);
        } else if (key == "workload") {
            apply_workload(as_obj(val, key, source), cfg.sys.workload, key, source);
        } else if (key == "hap") {
            apply_hap(as_obj(val, key, source), cfg.sys.hap, key, source);
        } else if (key == "link") {
            apply_link(as_obj(val, key, source), cfg.sys.link, key, source);
        } else if (key == "inter_hap_link") {
            apply_link(as_obj(val, key, source), cfg.sys.inter_hap_link, key, source);
        } else if (key == "thermal") {
            apply_thermal(as_obj(val, key, source), cfg.sys.thermal, key, source);
        } else if (key == "cost") {
            apply_cost(as_obj(val, key, source), cfg.sys.cost, key, source);
        } else if (key == "scenario") {
            apply_scenario(as_obj(val, key, source), cfg.scenario, key, source);
        } else if (key == "delay") {
            apply_delay(as_obj(val, key, source), cfg.delay, key, source);
        } else {
            fail(source, "unknown key '" + key + "'");
        }
    }
}

// "a.b.c=value" -> json pointer assignment. Values parse as JSON literals;
// bare words fall back to strings so enums don't need shell quoting.
void apply_override(ordered_json& doc, const std::string& assignment,
                    const std::string& source) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        fail(source, "override '" + assignment + "': expected KEY=VALUE");
    }
    std::string pointer = "/" + assignment.substr(0, eq);
    for (auto& c : pointer) {
        if (c == '.') c = '/';
    }
    const std::string raw = assignment.substr(eq + 1);
    ordered_json value = ordered_json::parse(raw, nullptr, false);
    if (value.is_discarded()) {
        value = raw;  // bare word
    }
    try {
        doc[ordered_json::json_pointer(pointer)] = std::move(value);
    } catch (const nlohmann::json::exception& e) {
        fail(source, "override '" + assignment + "': " + e.what());
    }
}

ordered_json link_to_json(const LinkConfig& l) {
    return ordered_json{{"carrier_hz", l.carrier_hz},
                        {"bandwidth_hz", l.bandwidth_hz},
                        {"tx_antennas", l.tx_antennas},
                        {"rx_antennas", l.rx_antennas},
                        {"tx_power_dbm", l.tx_power_dbm},
                        {"noise_figure_db", l.noise_figure_db},
                        {"distance_m", l.distance_m},
                        {"per_hop_distance_m", l.per_hop_distance_m}};
}

ordered_json delay_class_to_json(const DelayClassSpec& cls) {
    return ordered_json{{"mean_task_length_mi", cls.workload.mean_task_length_mi},
                        {"task_size_bits", cls.workload.task_size_bits}};
}

}  // namespace

RunConfig load_config_text(const std::string& text, const std::string& source,
                           const std::vector<std::string>& overrides) {
    ordered_json doc = ordered_json::object();
    const bool blank = text.find_first_not_of(" \t\r\n") == std::string::npos;
    if (!blank) {
        try {
            doc = ordered_json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            fail(source + ":" + line_col(text, e.byte), "parse error: " + std::string(e.what()));
        }
    }
    for (const auto& assignment : overrides) {
        apply_override(doc, assignment, source);
    }

    RunConfig cfg;
    apply_root(doc, cfg, source);
    try {
        validate(cfg);
    } catch (const std::domain_error& e) {
        fail(source, std::string("invalid config: ") + e.what());
    }
    return cfg;
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw config_error(path + ": cannot open config file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_config_text(buf.str(), path, overrides);
}

std::string dump_config(const RunConfig& cfg) {
    ordered_json doc;
    doc["seed"] = cfg.seed;
    doc["geo"] = {{"latitude_deg", cfg.sys.geo.latitude_deg},
                  {"day_of_year", cfg.sys.geo.day_of_year}};
    doc["server"] = {{"service_rate_mips", cfg.sys.server.service_rate_mips},
                     {"peak_power_w", cfg.sys.server.peak_power_w},
                     {"idle_fraction", cfg.sys.server.idle_fraction},
                     {"mass_kg", cfg.sys.server.mass_kg}};
    doc["workload"] = {
        {"arrival_rate", cfg.sys.workload.arrival_rate},
        {"mean_task_length_mi", cfg.sys.workload.mean_task_length_mi},
        {"task_size_bits", cfg.sys.workload.task_size_bits},
        {"task_class",
         cfg.sys.workload.task_class == TaskClass::short_tasks ? "short" : "long"}};
    doc["hap"] = {{"max_payload_kg", cfg.sys.hap.max_payload_kg},
                  {"pv",
                   {{"area_m2", cfg.sys.hap.pv.area_m2},
                    {"efficiency", cfg.sys.hap.pv.efficiency},
                    {"transmittance", cfg.sys.hap.pv.transmittance}}},
                  {"propeller_efficiency", cfg.sys.hap.propeller_efficiency},
                  {"battery_kwh_per_kg", cfg.sys.hap.battery_kwh_per_kg},
                  {"battery_mass_kg", cfg.sys.hap.battery_mass_kg},
                  {"drag_area_m2", cfg.sys.hap.drag_area_m2},
                  {"wind_speed_mps", cfg.sys.hap.wind_speed_mps},
                  {"air_density_kg_m3", cfg.sys.hap.air_density_kg_m3},
                  {"depth_of_discharge", cfg.sys.hap.depth_of_discharge},
                  {"harvest_derating", cfg.sys.hap.harvest_derating},
                  {"comm_power_w", cfg.sys.hap.comm_power_w},
                  {"stability_cap", cfg.sys.hap.stability_cap}};
    doc["link"] = link_to_json(cfg.sys.link);
    doc["inter_hap_link"] = link_to_json(cfg.sys.inter_hap_link);
    doc["thermal"] = {{"supply_temp_k", cfg.sys.thermal.supply_temp_k},
                      {"server_init_k", cfg.sys.thermal.server_init_k},
                      {"cpu_init_k", cfg.sys.thermal.cpu_init_k},
                      {"resistance_k_per_w", cfg.sys.thermal.resistance_k_per_w},
                      {"capacity_j_per_k", cfg.sys.thermal.capacity_j_per_k},
                      {"cooling_overhead", cfg.sys.thermal.cooling_overhead},
                      {"cpu_limit_k", cfg.sys.thermal.cpu_limit_k}};
    doc["cost"] = {{"electricity_price_per_kwh", cfg.sys.cost.electricity_price_per_kwh},
                   {"include_transmission_cost", cfg.sys.cost.include_transmission_cost}};
    const char* kind = nullptr;
    switch (cfg.scenario.kind) {
        case ScenarioKind::terrestrial_only: kind = "terrestrial"; break;
        case ScenarioKind::single_hap: kind = "single_hap"; break;
        case ScenarioKind::multi_hap: kind = "multi_hap"; break;
    }
    doc["scenario"] = {
        {"kind", kind},
        {"hap_count", cfg.scenario.hap_count},
        {"airborne_servers_per_hap", cfg.scenario.airborne_servers_per_hap},
        {"terrestrial_servers", cfg.scenario.terrestrial_servers},
        {"control",
         cfg.scenario.control == ControlMode::centralized ? "centralized" : "distributed"},
        {"terrestrial_fraction", cfg.scenario.terrestrial_fraction},
        {"offered_policy",
         cfg.scenario.offered_policy == OfferedPolicy::fixed ? "fixed" : "max_rate"},
        {"controller_response_s", cfg.scenario.controller_response_s},
        {"coordination_overhead_s", cfg.scenario.coordination_overhead_s}};
    doc["delay"] = {{"rho_min", cfg.delay.rho_min},
                    {"rho_max", cfg.delay.rho_max},
                    {"rho_step", cfg.delay.rho_step},
                    {"short", delay_class_to_json(cfg.delay.short_class)},
                    {"long", delay_class_to_json(cfg.delay.long_class)}};
    return doc.dump(2) + "\n";
}

void validate(const RunConfig& cfg) {
    validate(cfg.sys.geo);
    validate(cfg.sys.server);
    validate(cfg.sys.workload);
    validate(cfg.sys.hap);
    validate(cfg.sys.link);
    validate(cfg.sys.inter_hap_link);
    validate(cfg.sys.thermal);
    validate(cfg.sys.cost);
    validate(cfg.scenario);
    validate(cfg.delay);
    if (cfg.scenario.kind != ScenarioKind::terrestrial_only) {
        const int cap = max_servers(cfg.sys.hap, cfg.sys.server);
        if (cfg.scenario.airborne_servers_per_hap > cap) {
            throw std::domain_error(
                "scenario.airborne_servers_per_hap: " +
                std::to_string(cfg.scenario.airborne_servers_per_hap) +
                " exceeds the payload capacity of " + std::to_string(cap) + " servers");
        }
    }
}

}  // namespace hapdc
