#include "hapdc/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "hapdc/errors.hpp"

namespace hapdc {

namespace {

double dbm_to_w(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

// Sequentially (centralized) or evenly (distributed) fill k HAPs against a
// common per-HAP cap.
std::vector<double> allocate(double offered, int k, double per_hap_cap, ControlMode mode) {
    std::vector<double> shares(static_cast<std::size_t>(k), 0.0);
    if (k == 0 || offered <= 0.0 || per_hap_cap <= 0.0) {
        return shares;
    }
    if (mode == ControlMode::centralized) {
        double remaining = offered;
        for (auto& s : shares) {
            s = std::min(remaining, per_hap_cap);
            remaining -= s;
            if (remaining <= 0.0) break;
        }
    } else {
        const double total = std::min(offered, k * per_hap_cap);
        for (auto& s : shares) {
            s = total / k;
        }
    }
    return shares;
}

}  // namespace

void validate(const Scenario& sc) {
    if (sc.kind == ScenarioKind::single_hap && sc.hap_count != 1) {
        throw std::domain_error("hap_count: must be 1 for a single-HAP scenario");
    }
    if (sc.kind == ScenarioKind::multi_hap && sc.hap_count < 1) {
        throw std::domain_error("hap_count: must be >= 1 for a multi-HAP scenario");
    }
    if (sc.airborne_servers_per_hap < 0) {
        throw std::domain_error("airborne_servers_per_hap: must be >= 0");
    }
    if (sc.terrestrial_servers < 1) {
        throw std::domain_error("terrestrial_servers: must be >= 1");
    }
    if (sc.terrestrial_fraction < 0.0 || sc.terrestrial_fraction > 1.0) {
        throw std::domain_error("terrestrial_fraction: must be in [0, 1]");
    }
    if (sc.controller_response_s < 0.0 || sc.coordination_overhead_s < 0.0) {
        throw std::domain_error("control-plane delay constants must be >= 0");
    }
}

void validate(const CostModel& cm) {
    if (cm.electricity_price_per_kwh < 0.0) {
        throw std::domain_error("electricity_price_per_kwh: must be >= 0");
    }
}

void validate(const DelayStudy& d) {
    validate(d.short_class.workload);
    validate(d.long_class.workload);
    if (d.short_class.label.empty() || d.long_class.label.empty() ||
        d.short_class.label == d.long_class.label) {
        throw std::domain_error("delay class labels must be distinct and non-empty");
    }
    if (!(d.rho_min > 0.0) || !(d.rho_max < 1.0) || d.rho_min > d.rho_max) {
        throw std::domain_error("delay rho grid: need 0 < rho_min <= rho_max < 1");
    }
    if (!(d.rho_step > 0.0)) {
        throw std::domain_error("rho_step: must be > 0");
    }
}

int effective_hap_count(const Scenario& sc) {
    switch (sc.kind) {
        case ScenarioKind::terrestrial_only: return 0;
        case ScenarioKind::single_hap: return 1;
        case ScenarioKind::multi_hap: return sc.hap_count;
    }
    return 0;
}

int relay_hops(const Scenario& sc) { return std::max(0, effective_hap_count(sc) - 1); }

std::string scenario_label(const Scenario& sc) {
    if (sc.kind == ScenarioKind::terrestrial_only) {
        return "terrestrial";
    }
    return std::to_string(effective_hap_count(sc)) + "-hap";
}

double DispatchSplit::hap_total() const {
    return std::accumulate(per_hap.begin(), per_hap.end(), 0.0);
}

DispatchSplit dispatch(double offered_rate, const Scenario& sc,
                       const FlyingConditionResult& per_hap_limit, const SystemConfig& sys) {
    validate(sc);
    validate(sys.workload);
    validate(sys.server);
    if (offered_rate < 0.0) {
        throw std::domain_error("offered_rate: must be >= 0");
    }

    const int k = effective_hap_count(sc);
    const double fc_cap = std::max(0.0, per_hap_limit.max_arrival_rate);
    const double link_cap = capacity_bps(sys.link) / sys.workload.task_size_bits;

    DispatchSplit split;
    split.per_hap = allocate(offered_rate, k, std::min(fc_cap, link_cap), sc.control);

    // The link bound a HAP's share if the flying condition alone would have
    // allowed more.
    const auto unconstrained = allocate(offered_rate, k, fc_cap, sc.control);
    for (int i = 0; i < k; ++i) {
        if (split.per_hap[i] < unconstrained[i]) {
            split.outage = true;
            break;
        }
    }

    split.terrestrial = std::max(0.0, offered_rate - split.hap_total());
    const double ground_capacity =
        sc.terrestrial_servers * task_service_rate(sys.workload, sys.server);
    split.feasible = split.terrestrial < ground_capacity;
    return split;
}

double EnergyBreakdown::total_kwh() const {
    return terrestrial_compute_kwh + cooling_kwh + transmission_kwh;
}

ScenarioResult electricity_cost(const SystemConfig& sys, const Scenario& sc,
                                double offered_rate) {
    validate(sc);
    validate(sys.cost);
    const int k = effective_hap_count(sc);

    FlyingConditionResult limit;  // zero rate unless a HAP scenario
    if (k > 0) {
        limit = flying_condition(sys.hap, sys.geo, sc.airborne_servers_per_hap, sys.server,
                                 sys.workload);
    }

    ScenarioResult r;
    r.dispatched = dispatch(offered_rate, sc, limit, sys);
    r.outage = r.dispatched.outage;
    r.feasible = r.dispatched.feasible;

    const int n_ground = sc.terrestrial_servers;
    const double mu_t = task_service_rate(sys.workload, sys.server);
    const double rho_ground = r.dispatched.terrestrial / (n_ground * mu_t);
    const double rho_power = std::clamp(rho_ground, 0.0, 1.0);

    r.energy.terrestrial_compute_kwh =
        n_ground * server_power(sys.server, rho_power) * 24.0 / 1000.0;
    r.energy.cooling_kwh = cooling_energy(r.energy.terrestrial_compute_kwh, sys.thermal);
    if (sys.cost.include_transmission_cost && k > 0) {
        const double airtime_s = sys.workload.task_size_bits / capacity_bps(sys.link);
        const double tx_w = dbm_to_w(sys.link.tx_power_dbm);
        r.energy.transmission_kwh =
            r.dispatched.hap_total() * 86400.0 * airtime_s * tx_w / 3.6e6;
    }
    r.cost_per_day = sys.cost.electricity_price_per_kwh * r.energy.total_kwh();

    if (r.feasible) {
        WorkloadSpec per_server = sys.workload;
        per_server.arrival_rate = r.dispatched.terrestrial / n_ground;
        r.delays.queuing_s = mm1_sojourn(per_server, sys.server);
    } else {
        r.delays.queuing_s = std::numeric_limits<double>::infinity();
    }
    if (k > 0) {
        r.delays.rtt_s = transmission_rtt(sys.workload.task_size_bits, sys.link);
        if (sc.control == ControlMode::centralized) {
            r.delays.rtt_s += sc.controller_response_s;
        }
    }
    const int hops = relay_hops(sc);
    if (hops > 0) {
        r.delays.relay_s = relay_delay(sys.workload.task_size_bits, hops, sys.inter_hap_link) +
                           hops * sc.coordination_overhead_s;
    }
    return r;
}

double max_rate_offered(const SystemConfig& sys, const Scenario& sc) {
    validate(sc);
    const int k = effective_hap_count(sc);
    double hap_rate = 0.0;
    if (k > 0) {
        hap_rate = k * flying_condition(sys.hap, sys.geo, sc.airborne_servers_per_hap,
                                        sys.server, sys.workload)
                           .max_arrival_rate;
    }
    const double ground_capacity =
        sc.terrestrial_servers * task_service_rate(sys.workload, sys.server);
    return hap_rate + sc.terrestrial_fraction * ground_capacity;
}

double savings_percent(const SystemConfig& sys, const Scenario& sc, double offered_rate) {
    Scenario baseline = sc;
    baseline.kind = ScenarioKind::terrestrial_only;
    const ScenarioResult base = electricity_cost(sys, baseline, offered_rate);
    const ScenarioResult mine = electricity_cost(sys, sc, offered_rate);
    if (!base.feasible || !mine.feasible) {
        throw infeasible_error("savings undefined: scenario infeasible at offered rate " +
                               std::to_string(offered_rate));
    }
    if (base.cost_per_day <= 0.0) {
        if (mine.cost_per_day <= 0.0) return 0.0;  // zero price: nothing to save
        throw std::domain_error("savings undefined: baseline cost is zero");
    }
    return 100.0 * (base.cost_per_day - mine.cost_per_day) / base.cost_per_day;
}

std::vector<SweepPoint> sweep_days(const SystemConfig& sys, const Scenario& sc,
                                   double fixed_rate, int jobs) {
    validate(sc);
    if (fixed_rate < 0.0) {
        throw std::domain_error("fixed_rate: must be >= 0");
    }
    // Under the max-rate policy the offered load is anchored at the configured
    // day and held fixed, so the sweep exposes the seasonal harvest shape.
    const double offered = sc.offered_policy == OfferedPolicy::fixed
                               ? fixed_rate
                               : max_rate_offered(sys, sc);

    Scenario baseline = sc;
    baseline.kind = ScenarioKind::terrestrial_only;
    const double base_cost = electricity_cost(sys, baseline, offered).cost_per_day;

    std::vector<SweepPoint> out(365);
    auto eval_range = [&](int lo, int hi) {  // day interval [lo, hi)
        for (int day = lo; day < hi; ++day) {
            SystemConfig on_day = sys;
            on_day.geo.day_of_year = day;
            const ScenarioResult r = electricity_cost(on_day, sc, offered);
            SweepPoint& p = out[static_cast<std::size_t>(day - 1)];
            p.day = day;
            p.cost_per_day = r.cost_per_day;
            p.savings_pct =
                base_cost > 0.0 ? 100.0 * (base_cost - r.cost_per_day) / base_cost : 0.0;
            p.feasible = r.feasible;
        }
    };

    const int workers = std::clamp(jobs, 1, 365);
    if (workers == 1) {
        eval_range(1, 366);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const int chunk = (365 + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int lo = 1 + w * chunk;
            const int hi = std::min(366, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(eval_range, lo, hi);
        }
        for (auto& t : pool) t.join();
    }
    return out;
}

std::vector<DelayRow> delay_report(const SystemConfig& sys, const Scenario& sc,
                                   const DelayStudy& study) {
    validate(sc);
    validate(study);
    const int hops = relay_hops(sc);

    std::vector<DelayRow> rows;
    for (const DelayClassSpec* cls : {&study.short_class, &study.long_class}) {
        WorkloadSpec w = cls->workload;
        const double mu = task_service_rate(w, sys.server);
        for (int i = 0;; ++i) {
            const double rho = study.rho_min + i * study.rho_step;
            if (rho > study.rho_max + 1e-12) break;
            w.arrival_rate = rho * mu;
            DelayRow row;
            row.arrival_rate = w.arrival_rate;
            row.task_class = cls->label;
            row.queuing_s = mm1_sojourn(w, sys.server);
            row.rtt_s = transmission_rtt(w.task_size_bits, sys.link);
            row.relay_s =
                hops > 0 ? relay_delay(w.task_size_bits, hops, sys.inter_hap_link) : 0.0;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace hapdc
