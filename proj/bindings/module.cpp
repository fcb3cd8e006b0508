#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hapdc/config.hpp"
#include "hapdc/csv.hpp"
#include "hapdc/errors.hpp"

namespace py = pybind11;
using namespace hapdc;

PYBIND11_MODULE(_hapdc, m) {
    m.doc() = "Terrestrial/stratospheric data-center simulator core";

    py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<instability_error>(m, "InstabilityError", PyExc_ValueError);
    py::register_exception<infeasible_error>(m, "InfeasibleError", PyExc_RuntimeError);

    m.attr("SOLAR_CONSTANT_WM2") = kSolarConstantWm2;
    m.attr("SPEED_OF_LIGHT_MPS") = kSpeedOfLightMps;

    py::class_<GeoDay>(m, "GeoDay")
        .def(py::init<>())
        .def(py::init<double, int>(), py::arg("latitude_deg"), py::arg("day_of_year"))
        .def_readwrite("latitude_deg", &GeoDay::latitude_deg)
        .def_readwrite("day_of_year", &GeoDay::day_of_year);

    py::class_<PvConfig>(m, "PvConfig")
        .def(py::init<>())
        .def_readwrite("area_m2", &PvConfig::area_m2)
        .def_readwrite("efficiency", &PvConfig::efficiency)
        .def_readwrite("transmittance", &PvConfig::transmittance);

    py::class_<ServerSpec>(m, "ServerSpec")
        .def(py::init<>())
        .def_readwrite("service_rate_mips", &ServerSpec::service_rate_mips)
        .def_readwrite("peak_power_w", &ServerSpec::peak_power_w)
        .def_readwrite("idle_fraction", &ServerSpec::idle_fraction)
        .def_readwrite("mass_kg", &ServerSpec::mass_kg);

    py::enum_<TaskClass>(m, "TaskClass")
        .value("short_tasks", TaskClass::short_tasks)
        .value("long_tasks", TaskClass::long_tasks);

    py::class_<WorkloadSpec>(m, "WorkloadSpec")
        .def(py::init<>())
        .def_readwrite("arrival_rate", &WorkloadSpec::arrival_rate)
        .def_readwrite("mean_task_length_mi", &WorkloadSpec::mean_task_length_mi)
        .def_readwrite("task_size_bits", &WorkloadSpec::task_size_bits)
        .def_readwrite("task_class", &WorkloadSpec::task_class);

    py::enum_<UtilizationBand>(m, "UtilizationBand")
        .value("under", UtilizationBand::under)
        .value("effective", UtilizationBand::effective)
        .value("over", UtilizationBand::over);

    py::class_<HapConfig>(m, "HapConfig")
        .def(py::init<>())
        .def_readwrite("max_payload_kg", &HapConfig::max_payload_kg)
        .def_readwrite("pv", &HapConfig::pv)
        .def_readwrite("propeller_efficiency", &HapConfig::propeller_efficiency)
        .def_readwrite("battery_kwh_per_kg", &HapConfig::battery_kwh_per_kg)
        .def_readwrite("battery_mass_kg", &HapConfig::battery_mass_kg)
        .def_readwrite("drag_area_m2", &HapConfig::drag_area_m2)
        .def_readwrite("wind_speed_mps", &HapConfig::wind_speed_mps)
        .def_readwrite("air_density_kg_m3", &HapConfig::air_density_kg_m3)
        .def_readwrite("depth_of_discharge", &HapConfig::depth_of_discharge)
        .def_readwrite("harvest_derating", &HapConfig::harvest_derating)
        .def_readwrite("comm_power_w", &HapConfig::comm_power_w)
        .def_readwrite("stability_cap", &HapConfig::stability_cap);

    py::class_<FlyingConditionResult>(m, "FlyingConditionResult")
        .def(py::init<>())
        .def_readwrite("feasible", &FlyingConditionResult::feasible)
        .def_readwrite("max_utilization", &FlyingConditionResult::max_utilization)
        .def_readwrite("max_arrival_rate", &FlyingConditionResult::max_arrival_rate)
        .def_readwrite("energy_margin_kwh", &FlyingConditionResult::energy_margin_kwh);

    py::class_<LinkConfig>(m, "LinkConfig")
        .def(py::init<>())
        .def_readwrite("carrier_hz", &LinkConfig::carrier_hz)
        .def_readwrite("bandwidth_hz", &LinkConfig::bandwidth_hz)
        .def_readwrite("tx_antennas", &LinkConfig::tx_antennas)
        .def_readwrite("rx_antennas", &LinkConfig::rx_antennas)
        .def_readwrite("tx_power_dbm", &LinkConfig::tx_power_dbm)
        .def_readwrite("noise_figure_db", &LinkConfig::noise_figure_db)
        .def_readwrite("distance_m", &LinkConfig::distance_m)
        .def_readwrite("per_hop_distance_m", &LinkConfig::per_hop_distance_m);

    py::enum_<LinkStatus>(m, "LinkStatus")
        .value("ok", LinkStatus::ok)
        .value("outage", LinkStatus::outage);

    py::class_<ThermalParams>(m, "ThermalParams")
        .def(py::init<>())
        .def_readwrite("supply_temp_k", &ThermalParams::supply_temp_k)
        .def_readwrite("server_init_k", &ThermalParams::server_init_k)
        .def_readwrite("cpu_init_k", &ThermalParams::cpu_init_k)
        .def_readwrite("resistance_k_per_w", &ThermalParams::resistance_k_per_w)
        .def_readwrite("capacity_j_per_k", &ThermalParams::capacity_j_per_k)
        .def_readwrite("cooling_overhead", &ThermalParams::cooling_overhead)
        .def_readwrite("cpu_limit_k", &ThermalParams::cpu_limit_k);

    py::enum_<ScenarioKind>(m, "ScenarioKind")
        .value("terrestrial_only", ScenarioKind::terrestrial_only)
        .value("single_hap", ScenarioKind::single_hap)
        .value("multi_hap", ScenarioKind::multi_hap);

    py::enum_<ControlMode>(m, "ControlMode")
        .value("centralized", ControlMode::centralized)
        .value("distributed", ControlMode::distributed);

    py::enum_<OfferedPolicy>(m, "OfferedPolicy")
        .value("max_rate", OfferedPolicy::max_rate)
        .value("fixed", OfferedPolicy::fixed);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("kind", &Scenario::kind)
        .def_readwrite("hap_count", &Scenario::hap_count)
        .def_readwrite("airborne_servers_per_hap", &Scenario::airborne_servers_per_hap)
        .def_readwrite("terrestrial_servers", &Scenario::terrestrial_servers)
        .def_readwrite("control", &Scenario::control)
        .def_readwrite("terrestrial_fraction", &Scenario::terrestrial_fraction)
        .def_readwrite("offered_policy", &Scenario::offered_policy)
        .def_readwrite("controller_response_s", &Scenario::controller_response_s)
        .def_readwrite("coordination_overhead_s", &Scenario::coordination_overhead_s);

    py::class_<CostModel>(m, "CostModel")
        .def(py::init<>())
        .def_readwrite("electricity_price_per_kwh", &CostModel::electricity_price_per_kwh)
        .def_readwrite("include_transmission_cost", &CostModel::include_transmission_cost);

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_readwrite("geo", &SystemConfig::geo)
        .def_readwrite("server", &SystemConfig::server)
        .def_readwrite("workload", &SystemConfig::workload)
        .def_readwrite("hap", &SystemConfig::hap)
        .def_readwrite("link", &SystemConfig::link)
        .def_readwrite("inter_hap_link", &SystemConfig::inter_hap_link)
        .def_readwrite("thermal", &SystemConfig::thermal)
        .def_readwrite("cost", &SystemConfig::cost);

    py::class_<DispatchSplit>(m, "DispatchSplit")
        .def(py::init<>())
        .def_readwrite("per_hap", &DispatchSplit::per_hap)
        .def_readwrite("terrestrial", &DispatchSplit::terrestrial)
        .def_readwrite("outage", &DispatchSplit::outage)
        .def_readwrite("feasible", &DispatchSplit::feasible)
        .def("hap_total", &DispatchSplit::hap_total);

    py::class_<EnergyBreakdown>(m, "EnergyBreakdown")
        .def(py::init<>())
        .def_readwrite("terrestrial_compute_kwh", &EnergyBreakdown::terrestrial_compute_kwh)
        .def_readwrite("cooling_kwh", &EnergyBreakdown::cooling_kwh)
        .def_readwrite("transmission_kwh", &EnergyBreakdown::transmission_kwh)
        .def("total_kwh", &EnergyBreakdown::total_kwh);

    py::class_<DelaySummary>(m, "DelaySummary")
        .def(py::init<>())
        .def_readwrite("queuing_s", &DelaySummary::queuing_s)
        .def_readwrite("rtt_s", &DelaySummary::rtt_s)
        .def_readwrite("relay_s", &DelaySummary::relay_s);

    py::class_<ScenarioResult>(m, "ScenarioResult")
        .def(py::init<>())
        .def_readwrite("cost_per_day", &ScenarioResult::cost_per_day)
        .def_readwrite("energy", &ScenarioResult::energy)
        .def_readwrite("dispatched", &ScenarioResult::dispatched)
        .def_readwrite("delays", &ScenarioResult::delays)
        .def_readwrite("outage", &ScenarioResult::outage)
        .def_readwrite("feasible", &ScenarioResult::feasible);

    py::class_<SweepPoint>(m, "SweepPoint")
        .def(py::init<>())
        .def_readwrite("day", &SweepPoint::day)
        .def_readwrite("cost_per_day", &SweepPoint::cost_per_day)
        .def_readwrite("savings_pct", &SweepPoint::savings_pct)
        .def_readwrite("feasible", &SweepPoint::feasible);

    py::class_<DelayClassSpec>(m, "DelayClassSpec")
        .def(py::init<>())
        .def_readwrite("workload", &DelayClassSpec::workload)
        .def_readwrite("label", &DelayClassSpec::label);

    py::class_<DelayStudy>(m, "DelayStudy")
        .def(py::init<>())
        .def_readwrite("short_class", &DelayStudy::short_class)
        .def_readwrite("long_class", &DelayStudy::long_class)
        .def_readwrite("rho_min", &DelayStudy::rho_min)
        .def_readwrite("rho_max", &DelayStudy::rho_max)
        .def_readwrite("rho_step", &DelayStudy::rho_step);

    py::class_<DelayRow>(m, "DelayRow")
        .def(py::init<>())
        .def_readwrite("arrival_rate", &DelayRow::arrival_rate)
        .def_readwrite("task_class", &DelayRow::task_class)
        .def_readwrite("queuing_s", &DelayRow::queuing_s)
        .def_readwrite("rtt_s", &DelayRow::rtt_s)
        .def_readwrite("relay_s", &DelayRow::relay_s);

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("seed", &RunConfig::seed)
        .def_readwrite("sys", &RunConfig::sys)
        .def_readwrite("scenario", &RunConfig::scenario)
        .def_readwrite("delay", &RunConfig::delay);

    // solar
    m.def("solar_declination", &solar_declination, py::arg("day_of_year"));
    m.def("daylight_hours", &daylight_hours, py::arg("geo"));
    m.def("sunset_hour_angle", &sunset_hour_angle, py::arg("latitude_rad"),
          py::arg("declination_rad"));
    m.def("daily_harvest_kwh", &daily_harvest_kwh, py::arg("geo"), py::arg("pv"));

    // workload
    m.def("task_service_rate", &task_service_rate, py::arg("workload"), py::arg("server"));
    m.def("utilization", &utilization, py::arg("workload"), py::arg("server"));
    m.def("classify_utilization", &classify_utilization, py::arg("rho"));
    m.def("server_power", &server_power, py::arg("server"), py::arg("rho"));
    m.def("mm1_sojourn", &mm1_sojourn, py::arg("workload"), py::arg("server"));
    m.def("des_oracle", &des_oracle, py::arg("workload"), py::arg("server"),
          py::arg("n_tasks"), py::arg("seed"));

    // thermal
    m.def("temp_step", &temp_step, py::arg("t_k"), py::arg("power_w"), py::arg("params"),
          py::arg("dt_s"));
    m.def("steady_state_temp", &steady_state_temp, py::arg("power_w"), py::arg("params"));
    m.def("cooling_energy", &cooling_energy, py::arg("compute_energy_kwh"), py::arg("params"));
    m.def("within_cpu_limit", &within_cpu_limit, py::arg("power_w"), py::arg("params"));

    // link
    m.def("fspl_db", &fspl_db, py::arg("distance_m"), py::arg("carrier_hz"));
    m.def("capacity_bps", &capacity_bps, py::arg("link"));
    m.def("inter_hap_capacity_bps", &inter_hap_capacity_bps, py::arg("link"));
    m.def("transmission_rtt", &transmission_rtt, py::arg("bits"), py::arg("link"));
    m.def("relay_delay", &relay_delay, py::arg("bits"), py::arg("hops"), py::arg("link"));
    m.def("outage_check", &outage_check, py::arg("offered_bps"), py::arg("link"));

    // hap
    m.def("max_servers", &max_servers, py::arg("hap"), py::arg("server"));
    m.def("propulsion_power_w", &propulsion_power_w, py::arg("hap"));
    m.def("platform_harvest_kwh", &platform_harvest_kwh, py::arg("hap"), py::arg("geo"));
    m.def("flying_condition",
          py::overload_cast<const HapConfig&, const GeoDay&, int, const ServerSpec&,
                            const WorkloadSpec&>(&flying_condition),
          py::arg("hap"), py::arg("geo"), py::arg("n_servers"), py::arg("server"),
          py::arg("workload"));
    m.def("flying_condition",
          py::overload_cast<const HapConfig&, const GeoDay&, int, const ServerSpec&,
                            const WorkloadSpec&, double>(&flying_condition),
          py::arg("hap"), py::arg("geo"), py::arg("n_servers"), py::arg("server"),
          py::arg("workload"), py::arg("comm_power_w"));
    m.def("battery_night_feasible", &battery_night_feasible, py::arg("hap"), py::arg("geo"),
          py::arg("total_night_power_w"));

    // scenarios
    m.def("effective_hap_count", &effective_hap_count, py::arg("scenario"));
    m.def("relay_hops", &relay_hops, py::arg("scenario"));
    m.def("scenario_label", &scenario_label, py::arg("scenario"));
    m.def("dispatch", &dispatch, py::arg("offered_rate"), py::arg("scenario"),
          py::arg("per_hap_limit"), py::arg("sys"));
    m.def("electricity_cost", &electricity_cost, py::arg("sys"), py::arg("scenario"),
          py::arg("offered_rate"));
    m.def("max_rate_offered", &max_rate_offered, py::arg("sys"), py::arg("scenario"));
    m.def("savings_percent", &savings_percent, py::arg("sys"), py::arg("scenario"),
          py::arg("offered_rate"));
    m.def("sweep_days", &sweep_days, py::arg("sys"), py::arg("scenario"),
          py::arg("fixed_rate"), py::arg("jobs") = 1);
    m.def("delay_report", &delay_report, py::arg("sys"), py::arg("scenario"),
          py::arg("study"));

    // config
    m.def("load_config_text", &load_config_text, py::arg("text"), py::arg("source"),
          py::arg("overrides") = std::vector<std::string>{});
    m.def("load_config", &load_config, py::arg("path"),
          py::arg("overrides") = std::vector<std::string>{});
    m.def("dump_config", &dump_config, py::arg("config"));

    m.def("format_double", &format_double, py::arg("value"));
}
