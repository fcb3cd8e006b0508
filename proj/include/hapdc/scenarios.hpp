#pragma once

#include <string>
#include <vector>

#include "hapdc/hap.hpp"
#include "hapdc/link.hpp"
#include "hapdc/solar.hpp"
#include "hapdc/thermal.hpp"
#include "hapdc/workload.hpp"

namespace hapdc {

enum class ScenarioKind { terrestrial_only, single_hap, multi_hap };
enum class ControlMode { centralized, distributed };
enum class OfferedPolicy { max_rate, fixed };

struct Scenario {
    ScenarioKind kind = ScenarioKind::multi_hap;
    int hap_count = 4;  // 1 for single_hap, >= 1 for multi_hap
    int airborne_servers_per_hap = 40;
    int terrestrial_servers = 390;
    ControlMode control = ControlMode::distributed;
    // Fraction of terrestrial service capacity kept on the ground when the
    // offered load is taken at the scenario's maximum rate.
    double terrestrial_fraction = 0.5;
    OfferedPolicy offered_policy = OfferedPolicy::fixed;
    // Control-plane constants; both default to zero so the two modes differ
    // only in dispatch order.
    double controller_response_s = 0.0;
    double coordination_overhead_s = 0.0;
};

struct CostModel {
    double electricity_price_per_kwh = 0.12;
    bool include_transmission_cost = true;
};

void validate(const Scenario& sc);
void validate(const CostModel& cm);

// Everything a scenario evaluation needs besides the scenario itself.
struct SystemConfig {
    GeoDay geo;
    ServerSpec server;
    WorkloadSpec workload;
    HapConfig hap;
    LinkConfig link;            // ground to HAP
    LinkConfig inter_hap_link;  // HAP to HAP, capacity taken at per_hop_distance_m
    ThermalParams thermal;
    CostModel cost;
};

int effective_hap_count(const Scenario& sc);
int relay_hops(const Scenario& sc);  // k-HAP chain has k-1 hops

// "terrestrial", "1-hap", "4-hap", ...
std::string scenario_label(const Scenario& sc);

struct DispatchSplit {
    std::vector<double> per_hap;  // tasks/s assigned to each HAP
    double terrestrial = 0.0;
    bool outage = false;    // link capacity bound at least one HAP's share
    bool feasible = true;   // false on terrestrial overflow
    double hap_total() const;
};

// Fill HAPs first up to min(flying-condition rate, link rate); remainder goes
// to the ground. Centralized control fills in HAP index order, distributed
// splits the HAP share evenly.
DispatchSplit dispatch(double offered_rate, const Scenario& sc,
                       const FlyingConditionResult& per_hap_limit, const SystemConfig& sys);

struct EnergyBreakdown {
    double terrestrial_compute_kwh = 0.0;
    double cooling_kwh = 0.0;
    double transmission_kwh = 0.0;
    double total_kwh() const;
};

struct DelaySummary {
    double queuing_s = 0.0;  // terrestrial M/M/1 sojourn at the dispatched split
    double rtt_s = 0.0;      // ground-to-HAP round trip
    double relay_s = 0.0;    // inter-HAP chain plus control-plane constant
};

struct ScenarioResult {
    double cost_per_day = 0.0;
    EnergyBreakdown energy;
    DispatchSplit dispatched;
    DelaySummary delays;
    bool outage = false;
    bool feasible = false;
};

// Daily electricity cost of a scenario at the given offered arrival rate.
// Terrestrial compute and cooling are billed; HAP-processed workload costs
// only the ground-side transmission energy.
ScenarioResult electricity_cost(const SystemConfig& sys, const Scenario& sc, double offered_rate);

// Offered load at the scenario's maximum rate: sum of per-HAP flying-condition
// rates plus the configured terrestrial fraction of ground capacity.
double max_rate_offered(const SystemConfig& sys, const Scenario& sc);

// 100 * (cost_terrestrial - cost_sc) / cost_terrestrial at equal offered load.
double savings_percent(const SystemConfig& sys, const Scenario& sc, double offered_rate);

struct SweepPoint {
    int day = 0;
    double cost_per_day = 0.0;
    double savings_pct = 0.0;
    bool feasible = true;
};

// Evaluates days 1..365 at the configured latitude. `fixed_rate` is used when
// the scenario policy is `fixed`; under `max_rate` the offered load is the
// scenario maximum at the configured day, held constant across the sweep so
// the seasonal harvest shape shows up in the cost. Deterministic day order
// regardless of jobs.
std::vector<SweepPoint> sweep_days(const SystemConfig& sys, const Scenario& sc, double fixed_rate,
                                   int jobs = 1);

struct DelayClassSpec {
    WorkloadSpec workload;
    std::string label;
};

struct DelayStudy {
    DelayClassSpec short_class{{0.0, 50.0, 100000.0, TaskClass::short_tasks}, "short"};
    DelayClassSpec long_class{{0.0, 500.0, 500000.0, TaskClass::long_tasks}, "long"};
    double rho_min = 0.05;
    double rho_max = 0.95;
    double rho_step = 0.05;
};

void validate(const DelayStudy& d);

struct DelayRow {
    double arrival_rate = 0.0;
    std::string task_class;
    double queuing_s = 0.0;
    double rtt_s = 0.0;
    double relay_s = 0.0;
};

// Queuing, RTT and relaying delay per task class over a utilization grid of a
// single terrestrial server. The grid stays inside stability by construction.
std::vector<DelayRow> delay_report(const SystemConfig& sys, const Scenario& sc,
                                   const DelayStudy& study);

}  // namespace hapdc
