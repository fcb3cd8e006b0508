#pragma once

#include "hapdc/solar.hpp"
#include "hapdc/workload.hpp"

namespace hapdc {

struct HapConfig {
    double max_payload_kg = 450.0;
    PvConfig pv;
    double propeller_efficiency = 0.8;
    double battery_kwh_per_kg = 2.0;  // Lithium-Sulphur energy density
    double battery_mass_kg = 0.0;     // counts against max_payload_kg
    double drag_area_m2 = 50.0;
    double wind_speed_mps = 10.0;
    double air_density_kg_m3 = 0.0889;  // ISA at 20 km
    double depth_of_discharge = 0.9;
    double harvest_derating = 1.0;  // scalar on ideal harvest; explores energy-bound regimes
    double comm_power_w = 100.0;    // HAP-side communication draw, constant
    double stability_cap = 0.99;    // per-server queue utilization ceiling for max_arrival_rate
};

void validate(const HapConfig& cfg);

struct FlyingConditionResult {
    bool feasible = false;
    double max_utilization = 0.0;   // [0, 1]
    double max_arrival_rate = 0.0;  // tasks/s across all airborne servers
    double energy_margin_kwh = 0.0;  // harvest minus consumption at max_utilization
};

// Servers that fit in the payload budget after the battery.
int max_servers(const HapConfig& cfg, const ServerSpec& server);

// Station-keeping drag power against steady wind: 0.5*rho*A*v^3 / eta.
double propulsion_power_w(const HapConfig& cfg);

// Derated daily harvest for the platform, kWh.
double platform_harvest_kwh(const HapConfig& cfg, const GeoDay& geo);

// Solves the daily energy balance
//   harvest = 24h * (P_prop + P_comm + n * server_power(rho))
// for the utilization ratio, clamped to [0, 1]. Feasible iff the harvest
// covers the rho = 0 baseline. max_arrival_rate additionally respects the
// per-server queue stability cap.
FlyingConditionResult flying_condition(const HapConfig& cfg, const GeoDay& geo, int n_servers,
                                       const ServerSpec& server, const WorkloadSpec& workload,
                                       double comm_power_w);

// Overload using cfg.comm_power_w.
FlyingConditionResult flying_condition(const HapConfig& cfg, const GeoDay& geo, int n_servers,
                                       const ServerSpec& server, const WorkloadSpec& workload);

// True iff the battery can carry the given constant power through the night.
bool battery_night_feasible(const HapConfig& cfg, const GeoDay& geo, double total_night_power_w);

}  // namespace hapdc
