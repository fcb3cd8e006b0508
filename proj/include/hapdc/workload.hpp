#pragma once

#include <cstdint>
#include <string>

namespace hapdc {

struct ServerSpec {
    double service_rate_mips = 10000.0;  // million instructions per second
    double peak_power_w = 200.0;
    double idle_fraction = 0.6;  // fraction of peak drawn at zero load
    double mass_kg = 11.0;
};

enum class TaskClass { short_tasks, long_tasks };

struct WorkloadSpec {
    double arrival_rate = 0.0;           // tasks/s offered to the system
    double mean_task_length_mi = 100.0;  // million instructions per task
    double task_size_bits = 1200.0;      // transmission payload per task
    TaskClass task_class = TaskClass::short_tasks;
};

void validate(const ServerSpec& s);
void validate(const WorkloadSpec& w);

// Per-task service rate of one server, tasks/s.
inline double task_service_rate(const WorkloadSpec& w, const ServerSpec& s) {
    return s.service_rate_mips / w.mean_task_length_mi;
}

// rho = arrival_rate * mean_task_length / service_rate. May exceed 1; callers
// check stability where it matters.
double utilization(const WorkloadSpec& w, const ServerSpec& s);

enum class UtilizationBand { under, effective, over };

// under < 0.70 <= effective < 0.95 <= over
UtilizationBand classify_utilization(double rho);

const char* to_string(UtilizationBand band);

// Linear power model anchored at idle_fraction * peak for an idle server.
// Requires rho in [0, 1].
double server_power(const ServerSpec& s, double rho);

// M/M/1 mean sojourn time (waiting + service), seconds. Throws
// instability_error when arrival rate >= per-task service rate.
double mm1_sojourn(const WorkloadSpec& w, const ServerSpec& s);

// Single-server FIFO discrete-event simulation with exponential interarrival
// and service times. Bit-reproducible for a fixed seed (the exponential draws
// are inverted from raw mt19937_64 output, not a library distribution).
// Returns the empirical mean sojourn over n_tasks completions.
double des_oracle(const WorkloadSpec& w, const ServerSpec& s, std::uint64_t n_tasks,
                  std::uint64_t seed);

}  // namespace hapdc
