#include "hapdc/thermal.hpp"

#include <stdexcept>
#include <string>

namespace hapdc {

void validate(const ThermalParams& p) {
    if (!(p.supply_temp_k > 0.0) || !(p.server_init_k > 0.0) || !(p.cpu_init_k > 0.0)) {
        throw std::domain_error("thermal temperatures: must be > 0 K");
    }
    if (!(p.resistance_k_per_w > 0.0)) {
        throw std::domain_error("resistance_k_per_w: must be > 0");
    }
    if (!(p.capacity_j_per_k > 0.0)) {
        throw std::domain_error("capacity_j_per_k: must be > 0");
    }
    if (p.cooling_overhead < 0.0) {
        throw std::domain_error("cooling_overhead: must be >= 0");
    }
    if (!(p.cpu_limit_k > 0.0)) {
        throw std::domain_error("cpu_limit_k: must be > 0");
    }
}

double temp_step(double t_k, double power_w, const ThermalParams& p, double dt_s) {
    validate(p);
    if (!(dt_s > 0.0)) {
        throw std::domain_error("dt_s: must be > 0");
    }
    const double rc = p.resistance_k_per_w * p.capacity_j_per_k;
    if (dt_s >= rc) {
        throw std::domain_error("dt_s: explicit Euler unstable for dt >= R*C = " +
                                std::to_string(rc) + " s");
    }
    return t_k + dt_s * (power_w - (t_k - p.supply_temp_k) / p.resistance_k_per_w) /
                     p.capacity_j_per_k;
}

double steady_state_temp(double power_w, const ThermalParams& p) {
    validate(p);
    if (power_w < 0.0) {
        throw std::domain_error("power_w: must be >= 0");
    }
    return p.supply_temp_k + p.resistance_k_per_w * power_w;
}

double cooling_energy(double compute_energy_kwh, const ThermalParams& p) {
    validate(p);
    if (compute_energy_kwh < 0.0) {
        throw std::domain_error("compute_energy_kwh: must be >= 0");
    }
    return p.cooling_overhead * compute_energy_kwh;
}

bool within_cpu_limit(double power_w, const ThermalParams& p) {
    return steady_state_temp(power_w, p) <= p.cpu_limit_k;
}

}  // namespace hapdc
