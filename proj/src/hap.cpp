#include "hapdc/hap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hapdc {

void validate(const HapConfig& cfg) {
    validate(cfg.pv);
    if (!(cfg.max_payload_kg > 0.0)) {
        throw std::domain_error("max_payload_kg: must be > 0");
    }
    if (!(cfg.propeller_efficiency > 0.0) || cfg.propeller_efficiency > 1.0) {
        throw std::domain_error("propeller_efficiency: must be in (0, 1]");
    }
    if (!(cfg.battery_kwh_per_kg > 0.0)) {
        throw std::domain_error("battery_kwh_per_kg: must be > 0");
    }
    if (cfg.battery_mass_kg < 0.0) {
        throw std::domain_error("battery_mass_kg: must be >= 0");
    }
    if (!(cfg.drag_area_m2 > 0.0) || !(cfg.air_density_kg_m3 > 0.0)) {
        throw std::domain_error("drag_area_m2/air_density_kg_m3: must be > 0");
    }
    if (cfg.wind_speed_mps < 0.0) {
        throw std::domain_error("wind_speed_mps: must be >= 0");
    }
    if (!(cfg.depth_of_discharge > 0.0) || cfg.depth_of_discharge > 1.0) {
        throw std::domain_error("depth_of_discharge: must be in (0, 1]");
    }
    if (!(cfg.harvest_derating > 0.0) || cfg.harvest_derating > 1.0) {
        throw std::domain_error("harvest_derating: must be in (0, 1]");
    }
    if (cfg.comm_power_w < 0.0) {
        throw std::domain_error("comm_power_w: must be >= 0");
    }
    if (!(cfg.stability_cap > 0.0) || !(cfg.stability_cap < 1.0)) {
        throw std::domain_error("stability_cap: must be in (0, 1)");
    }
}

int max_servers(const HapConfig& cfg, const ServerSpec& server) {
    validate(cfg);
    validate(server);
    const double remaining = cfg.max_payload_kg - cfg.battery_mass_kg;
    if (remaining <= 0.0) {
        return 0;
    }
    return static_cast<int>(std::floor(remaining / server.mass_kg));
}

double propulsion_power_w(const HapConfig& cfg) {
    validate(cfg);
    const double v = cfg.wind_speed_mps;
    return 0.5 * cfg.air_density_kg_m3 * cfg.drag_area_m2 * v * v * v /
           cfg.propeller_efficiency;
}

double platform_harvest_kwh(const HapConfig& cfg, const GeoDay& geo) {
    return cfg.harvest_derating * daily_harvest_kwh(geo, cfg.pv);
}

FlyingConditionResult flying_condition(const HapConfig& cfg, const GeoDay& geo, int n_servers,
                                       const ServerSpec& server, const WorkloadSpec& workload,
                                       double comm_power_w) {
    validate(cfg);
    validate(server);
    validate(workload);
    if (comm_power_w < 0.0) {
        throw std::domain_error("comm_power_w: must be >= 0");
    }
    if (n_servers < 0) {
        throw std::domain_error("n_servers: must be >= 0");
    }
    if (n_servers > max_servers(cfg, server)) {
        throw std::domain_error("n_servers: " + std::to_string(n_servers) +
                                " exceeds payload capacity of " +
                                std::to_string(max_servers(cfg, server)) + " servers");
    }

    const double harvest_kwh = platform_harvest_kwh(cfg, geo);
    const double available_w = harvest_kwh * 1000.0 / 24.0;
    const double baseline_w =
        propulsion_power_w(cfg) + comm_power_w + n_servers * server_power(server, 0.0);

    FlyingConditionResult r;
    if (available_w < baseline_w) {
        r.feasible = false;
        r.max_utilization = 0.0;
        r.max_arrival_rate = 0.0;
        r.energy_margin_kwh = harvest_kwh - baseline_w * 24.0 / 1000.0;
        return r;
    }

    r.feasible = true;
    const double dynamic_w = n_servers * (1.0 - server.idle_fraction) * server.peak_power_w;
    if (n_servers == 0) {
        r.max_utilization = 0.0;
    } else if (dynamic_w <= 0.0) {
        // Power is load-independent; nothing stops full utilization.
        r.max_utilization = 1.0;
    } else {
        r.max_utilization = std::clamp((available_w - baseline_w) / dynamic_w, 0.0, 1.0);
    }

    const double mu_t = task_service_rate(workload, server);
    r.max_arrival_rate = n_servers * std::min(r.max_utilization, cfg.stability_cap) * mu_t;

    const double consumed_w = baseline_w + dynamic_w * r.max_utilization;
    double margin = harvest_kwh - consumed_w * 24.0 / 1000.0;
    if (margin < 0.0 && margin > -1e-9 * std::max(1.0, harvest_kwh)) {
        margin = 0.0;  // rounding residue of the interior solve
    }
    r.energy_margin_kwh = margin;
    return r;
}

FlyingConditionResult flying_condition(const HapConfig& cfg, const GeoDay& geo, int n_servers,
                                       const ServerSpec& server, const WorkloadSpec& workload) {
    return flying_condition(cfg, geo, n_servers, server, workload, cfg.comm_power_w);
}

bool battery_night_feasible(const HapConfig& cfg, const GeoDay& geo,
                            double total_night_power_w) {
    validate(cfg);
    if (total_night_power_w < 0.0) {
        throw std::domain_error("total_night_power_w: must be >= 0");
    }
    const double night_hours = 24.0 - daylight_hours(geo);
    const double required_kwh = total_night_power_w * night_hours / 1000.0;
    const double usable_kwh =
        cfg.battery_mass_kg * cfg.battery_kwh_per_kg * cfg.depth_of_discharge;
    return required_kwh <= usable_kwh;
}

}  // namespace hapdc
