#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hapdc/hap.hpp"

using namespace hapdc;

namespace {

// Energy-bound profile used by the shipped flying_* configs: equator, light
// wind, heavy harvest derating.
HapConfig flying_profile() {
    HapConfig cfg;
    cfg.wind_speed_mps = 5.0;
    cfg.harvest_derating = 0.006;
    return cfg;
}

}  // namespace

TEST_CASE("payload cap: 450 kg of 11 kg servers is 40") {
    HapConfig cfg;
    ServerSpec server;
    CHECK(max_servers(cfg, server) == 40);
    cfg.battery_mass_kg = 450.0;
    CHECK(max_servers(cfg, server) == 0);
    cfg.battery_mass_kg = 55.0;  // trade five servers for battery
    CHECK(max_servers(cfg, server) == 35);
    CHECK(max_servers(cfg, server) * server.mass_kg + cfg.battery_mass_kg <=
          cfg.max_payload_kg);
}

TEST_CASE("propulsion power is cubic in wind speed") {
    HapConfig cfg;
    CHECK(propulsion_power_w(cfg) == doctest::Approx(2778.125).epsilon(1e-12));
    cfg.wind_speed_mps = 0.0;
    CHECK(propulsion_power_w(cfg) == 0.0);
    cfg.wind_speed_mps = 10.0;
    const double p10 = propulsion_power_w(cfg);
    cfg.wind_speed_mps = 20.0;
    CHECK(propulsion_power_w(cfg) == doctest::Approx(8.0 * p10).epsilon(1e-12));
}

TEST_CASE("platform harvest applies the derating scalar") {
    HapConfig cfg = flying_profile();
    const GeoDay geo{0.0, 81};
    CHECK(platform_harvest_kwh(cfg, geo) ==
          doctest::Approx(0.006 * daily_harvest_kwh(geo, cfg.pv)).epsilon(1e-12));
}

TEST_CASE("flying condition is infeasible in polar night") {
    HapConfig cfg;  // full harvest, still zero at the pole in winter
    const auto r = flying_condition(cfg, {80.0, 355}, 40, ServerSpec{}, WorkloadSpec{});
    CHECK_FALSE(r.feasible);
    CHECK(r.max_utilization == 0.0);
    CHECK(r.max_arrival_rate == 0.0);
    CHECK(r.energy_margin_kwh < 0.0);
}

TEST_CASE("flying condition boundary: harvest equals idle baseline") {
    HapConfig cfg = flying_profile();
    const GeoDay geo{0.0, 81};
    ServerSpec server;
    const int n = 40;
    const double avail_w = platform_harvest_kwh(cfg, geo) * 1000.0 / 24.0;
    const double idle_w = n * server_power(server, 0.0);
    // choose comm power so the rho=0 baseline consumes (almost) exactly the
    // harvest; the microwatt of slack keeps rounding on the feasible side
    cfg.comm_power_w = avail_w - propulsion_power_w(cfg) - idle_w - 1e-6;
    REQUIRE(cfg.comm_power_w > 0.0);
    const auto r = flying_condition(cfg, geo, n, server, WorkloadSpec{});
    CHECK(r.feasible);
    CHECK(r.max_utilization == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(std::abs(r.energy_margin_kwh) < 1e-6);
}

TEST_CASE("fewer servers run hotter at equal harvest") {
    const HapConfig cfg = flying_profile();
    const GeoDay geo{0.0, 172};
    const auto r40 = flying_condition(cfg, geo, 40, ServerSpec{}, WorkloadSpec{});
    const auto r35 = flying_condition(cfg, geo, 35, ServerSpec{}, WorkloadSpec{});
    REQUIRE(r40.feasible);
    REQUIRE(r35.feasible);
    CHECK(r35.max_utilization > r40.max_utilization);
    CHECK(r40.max_utilization == doctest::Approx(0.7448644622539708).epsilon(1e-9));
}

TEST_CASE("utilization grows with harvest and shrinks with server count") {
    HapConfig lo = flying_profile();
    HapConfig hi = flying_profile();
    hi.harvest_derating = 0.007;
    const GeoDay geo{0.0, 172};
    const auto rl = flying_condition(lo, geo, 40, ServerSpec{}, WorkloadSpec{});
    const auto rh = flying_condition(hi, geo, 40, ServerSpec{}, WorkloadSpec{});
    CHECK(rh.max_utilization > rl.max_utilization);
}

TEST_CASE("max arrival rate respects the stability cap") {
    const HapConfig cfg = flying_profile();
    const GeoDay geo{0.0, 172};
    ServerSpec server;
    WorkloadSpec workload;
    const double mu_t = task_service_rate(workload, server);
    const auto r40 = flying_condition(cfg, geo, 40, server, workload);
    CHECK(r40.max_arrival_rate ==
          doctest::Approx(40 * r40.max_utilization * mu_t).epsilon(1e-12));
    // clamped case: full harvest gives utilization 1, rate capped at 0.99 rho
    HapConfig full;
    const auto rf = flying_condition(full, geo, 40, server, workload);
    CHECK(rf.max_utilization == 1.0);
    CHECK(rf.max_arrival_rate == doctest::Approx(40 * 0.99 * mu_t).epsilon(1e-12));
    // per-server queue utilization stays below 1 in both cases
    CHECK(r40.max_arrival_rate / (40 * mu_t) < 1.0);
    CHECK(rf.max_arrival_rate / (40 * mu_t) < 1.0);
}

TEST_CASE("energy balance closes at the flying-condition solution") {
    const HapConfig cfg = flying_profile();
    const GeoDay geo{0.0, 100};
    ServerSpec server;
    const int n = 40;
    const auto r = flying_condition(cfg, geo, n, server, WorkloadSpec{});
    REQUIRE(r.feasible);
    REQUIRE(r.max_utilization < 1.0);  // interior solve
    const double harvest = platform_harvest_kwh(cfg, geo);
    const double consumed_w = propulsion_power_w(cfg) + cfg.comm_power_w +
                              n * server_power(server, r.max_utilization);
    const double consumed_kwh = consumed_w * 24.0 / 1000.0;
    CHECK(std::abs(harvest - consumed_kwh) / harvest < 1e-3);
    CHECK(harvest - consumed_kwh == doctest::Approx(r.energy_margin_kwh).epsilon(1e-9));
}

TEST_CASE("oversubscribing the payload throws") {
    HapConfig cfg;
    CHECK_THROWS_WITH_AS(flying_condition(cfg, {0.0, 81}, 41, ServerSpec{}, WorkloadSpec{}),
                         doctest::Contains("payload"), std::domain_error);
    CHECK_THROWS_AS(flying_condition(cfg, {0.0, 81}, -1, ServerSpec{}, WorkloadSpec{}),
                    std::domain_error);
}

TEST_CASE("battery sizing for the night") {
    HapConfig cfg;
    cfg.depth_of_discharge = 1.0;  // 2 kWh/kg usable
    const GeoDay equinox{0.0, 81};  // ~12 h night
    CHECK(battery_night_feasible(cfg, equinox, 0.0));
    // ~100 kWh of night demand needs ~50 kg of battery
    const double p_w = 100.0 * 1000.0 / (24.0 - daylight_hours(equinox));
    cfg.battery_mass_kg = 50.001;
    CHECK(battery_night_feasible(cfg, equinox, p_w));
    cfg.battery_mass_kg = 49.9;
    CHECK_FALSE(battery_night_feasible(cfg, equinox, p_w));
    // polar day: no night, any load is fine
    cfg.battery_mass_kg = 0.0;
    CHECK(battery_night_feasible(cfg, {80.0, 172}, 1e9));
}

TEST_CASE("hap validation rejects bad fields") {
    HapConfig cfg;
    cfg.propeller_efficiency = 0.0;
    CHECK_THROWS_WITH_AS(validate(cfg), doctest::Contains("propeller_efficiency"),
                         std::domain_error);
    cfg = HapConfig{};
    cfg.harvest_derating = 0.0;
    CHECK_THROWS_AS(validate(cfg), std::domain_error);
    cfg = HapConfig{};
    cfg.stability_cap = 1.0;
    CHECK_THROWS_AS(validate(cfg), std::domain_error);
}
