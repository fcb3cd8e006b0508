#pragma once

namespace hapdc {

// Lumped RC model of a terrestrial server plus a proportional cooling
// overhead. Stratosphere ambient (-50 C to -15 C) needs no cooling units, so
// HAP-side configs set cooling_overhead = 0.
struct ThermalParams {
    double supply_temp_k = 299.15;
    double server_init_k = 310.0;
    double cpu_init_k = 318.0;
    double resistance_k_per_w = 0.34;
    double capacity_j_per_k = 340.0;
    double cooling_overhead = 40.0 / 56.0;  // cooling energy per unit compute energy
    double cpu_limit_k = 358.0;
};

void validate(const ThermalParams& p);

// One explicit-Euler step of the RC model. Requires dt < R*C.
double temp_step(double t_k, double power_w, const ThermalParams& p, double dt_s);

// Equilibrium temperature under constant power: T_supply + R*P.
double steady_state_temp(double power_w, const ThermalParams& p);

// Cooling energy for a given compute energy, kWh. Zero overhead models the
// HAP case.
double cooling_energy(double compute_energy_kwh, const ThermalParams& p);

// Sanity check used by feasibility reports: steady-state CPU temperature
// stays below the configured limit.
bool within_cpu_limit(double power_w, const ThermalParams& p);

}  // namespace hapdc
