// Command-line front end: loads a config, runs one subcommand, writes CSV.
// Exit codes: 0 ok, 1 config/usage error, 2 infeasible computation.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hapdc/config.hpp"
#include "hapdc/csv.hpp"
#include "hapdc/errors.hpp"
#include "json.hpp"

namespace {

using namespace hapdc;

void error_line(const std::string& kind, const std::string& message) {
    nlohmann::ordered_json j{{"error", kind}, {"message", message}};
    std::cerr << j.dump() << "\n";
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        throw config_error(out_path + ": cannot open output file");
    }
    f << text;
}

// terrestrial baseline, single HAP, and the configured constellation —
// deduplicated when the config itself is one of the smaller scenarios.
std::vector<Scenario> standard_variants(const Scenario& sc) {
    std::vector<Scenario> out;
    Scenario terr = sc;
    terr.kind = ScenarioKind::terrestrial_only;
    out.push_back(terr);
    const int k = effective_hap_count(sc);
    if (k >= 1) {
        Scenario single = sc;
        single.kind = ScenarioKind::single_hap;
        single.hap_count = 1;
        out.push_back(single);
    }
    if (k >= 2) {
        out.push_back(sc);
    }
    return out;
}

double offered_rate_for(const RunConfig& cfg, const Scenario& sc) {
    if (sc.offered_policy == OfferedPolicy::fixed) {
        return cfg.sys.workload.arrival_rate;
    }
    return max_rate_offered(cfg.sys, sc);
}

std::string run_flying_condition(const RunConfig& cfg) {
    CsvWriter w("day,lat,n_servers,feasible,max_utilization,max_arrival_rate");
    const int n = cfg.scenario.airborne_servers_per_hap;
    for (int day = 1; day <= 365; ++day) {
        GeoDay g{cfg.sys.geo.latitude_deg, day};
        const auto r = flying_condition(cfg.sys.hap, g, n, cfg.sys.server, cfg.sys.workload);
        w.begin_row();
        w.field(day);
        w.field(g.latitude_deg);
        w.field(n);
        w.field(r.feasible);
        w.field(r.max_utilization);
        w.field(r.max_arrival_rate);
        w.end_row();
    }
    return w.str();
}

std::string run_cost_sweep(const RunConfig& cfg, int jobs) {
    CsvWriter w("day,scenario,cost,savings_pct");
    for (const Scenario& sv : standard_variants(cfg.scenario)) {
        const auto points = sweep_days(cfg.sys, sv, cfg.sys.workload.arrival_rate, jobs);
        const std::string label = scenario_label(sv);
        for (const SweepPoint& p : points) {
            w.begin_row();
            w.field(p.day);
            w.field(label);
            w.field(p.cost_per_day);
            w.field(p.savings_pct);
            w.end_row();
        }
    }
    return w.str();
}

std::string run_delay_compare(const RunConfig& cfg) {
    CsvWriter w("arrival_rate,task_class,queuing_s,rtt_s,relay_s");
    for (const DelayRow& r : delay_report(cfg.sys, cfg.scenario, cfg.delay)) {
        w.begin_row();
        w.field(r.arrival_rate);
        w.field(r.task_class);
        w.field(r.queuing_s);
        w.field(r.rtt_s);
        w.field(r.relay_s);
        w.end_row();
    }
    return w.str();
}

std::string run_scenario(const RunConfig& cfg) {
    CsvWriter w(
        "scenario,offered_rate,cost_per_day,savings_pct,terrestrial_kwh,cooling_kwh,"
        "transmission_kwh,queuing_s,rtt_s,relay_s,outage,feasible");
    for (const Scenario& sv : standard_variants(cfg.scenario)) {
        const double rate = offered_rate_for(cfg, sv);
        const ScenarioResult r = electricity_cost(cfg.sys, sv, rate);
        const double savings =
            sv.kind == ScenarioKind::terrestrial_only ? 0.0 : savings_percent(cfg.sys, sv, rate);
        w.begin_row();
        w.field(scenario_label(sv));
        w.field(rate);
        w.field(r.cost_per_day);
        w.field(savings);
        w.field(r.energy.terrestrial_compute_kwh);
        w.field(r.energy.cooling_kwh);
        w.field(r.energy.transmission_kwh);
        w.field(r.delays.queuing_s);
        w.field(r.delays.rtt_s);
        w.field(r.delays.relay_s);
        w.field(r.outage);
        w.field(r.feasible);
        w.end_row();
    }
    return w.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Terrestrial/stratospheric data-center energy and delay simulator"};
    app.require_subcommand(0, 1);

    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::vector<std::string> sets;
    bool dump = false;

    app.add_option("--config", config_path, "JSON config file (omit for defaults)");
    app.add_option("--out", out_path, "output path; '-' or empty for stdout");
    auto* seed_opt = app.add_option("--seed", seed, "override the config seed");
    app.add_option("--jobs", jobs, "worker threads for day sweeps")
        ->check(CLI::PositiveNumber);
    app.add_option("--set", sets, "config override KEY=VALUE, dotted path, repeatable");
    app.add_flag("--dump-config", dump, "print the effective config and exit");

    auto* sub_fc =
        app.add_subcommand("flying-condition", "full-year flying-condition table");
    auto* sub_cs = app.add_subcommand("cost-sweep", "full-year electricity cost per scenario");
    auto* sub_dc = app.add_subcommand("delay-compare", "queuing vs transmission vs relay delay");
    auto* sub_sn = app.add_subcommand("scenario", "single-day scenario comparison");
    for (CLI::App* s : {sub_fc, sub_cs, sub_dc, sub_sn}) {
        s->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0) {
            error_line("usage", e.what());
            app.exit(e);
            return 1;
        }
        return app.exit(e);  // --help and friends
    }

    try {
        RunConfig cfg = config_path.empty()
                            ? load_config_text("", "<defaults>", sets)
                            : load_config(config_path, sets);
        if (seed_opt->count() > 0) {
            cfg.seed = seed;
        }

        if (dump) {
            write_output(dump_config(cfg), out_path);
            return 0;
        }
        if (app.get_subcommands().empty()) {
            error_line("usage", "expected a subcommand (or --dump-config)");
            return 1;
        }

        std::string csv;
        if (app.got_subcommand(sub_fc)) {
            csv = run_flying_condition(cfg);
        } else if (app.got_subcommand(sub_cs)) {
            csv = run_cost_sweep(cfg, jobs);
        } else if (app.got_subcommand(sub_dc)) {
            csv = run_delay_compare(cfg);
        } else {
            csv = run_scenario(cfg);
        }
        write_output(csv, out_path);
        return 0;
    } catch (const config_error& e) {
        error_line("config", e.what());
        return 1;
    } catch (const infeasible_error& e) {
        error_line("infeasible", e.what());
        return 2;
    } catch (const instability_error& e) {
        error_line("infeasible", e.what());
        return 2;
    } catch (const std::exception& e) {
        error_line("infeasible", e.what());
        return 2;
    }
}
