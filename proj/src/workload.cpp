#include "hapdc/workload.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hapdc/errors.hpp"

namespace hapdc {

void validate(const ServerSpec& s) {
    if (!(s.service_rate_mips > 0.0)) {
        throw std::domain_error("service_rate_mips: must be > 0");
    }
    if (!(s.peak_power_w > 0.0)) {
        throw std::domain_error("peak_power_w: must be > 0");
    }
    if (s.idle_fraction < 0.0 || s.idle_fraction > 1.0) {
        throw std::domain_error("idle_fraction: must be in [0, 1]");
    }
    if (!(s.mass_kg > 0.0)) {
        throw std::domain_error("mass_kg: must be > 0");
    }
}

void validate(const WorkloadSpec& w) {
    if (w.arrival_rate < 0.0) {
        throw std::domain_error("arrival_rate: must be >= 0");
    }
    if (!(w.mean_task_length_mi > 0.0)) {
        throw std::domain_error("mean_task_length_mi: must be > 0");
    }
    if (!(w.task_size_bits > 0.0)) {
        throw std::domain_error("task_size_bits: must be > 0");
    }
}

double utilization(const WorkloadSpec& w, const ServerSpec& s) {
    validate(w);
    validate(s);
    return w.arrival_rate * w.mean_task_length_mi / s.service_rate_mips;
}

UtilizationBand classify_utilization(double rho) {
    if (rho < 0.0) {
        throw std::domain_error("utilization: must be >= 0, got " + std::to_string(rho));
    }
    if (rho < 0.70) return UtilizationBand::under;
    if (rho < 0.95) return UtilizationBand::effective;
    return UtilizationBand::over;
}

const char* to_string(UtilizationBand band) {
    switch (band) {
        case UtilizationBand::under: return "under";
        case UtilizationBand::effective: return "effective";
        case UtilizationBand::over: return "over";
    }
    return "?";
}

double server_power(const ServerSpec& s, double rho) {
    validate(s);
    if (rho < 0.0 || rho > 1.0) {
        throw std::domain_error("server_power: utilization must be in [0, 1], got " +
                                std::to_string(rho));
    }
    return s.idle_fraction * s.peak_power_w + (1.0 - s.idle_fraction) * s.peak_power_w * rho;
}

double mm1_sojourn(const WorkloadSpec& w, const ServerSpec& s) {
    validate(w);
    validate(s);
    const double mu = task_service_rate(w, s);
    if (w.arrival_rate >= mu) {
        throw instability_error("mm1_sojourn: arrival rate " + std::to_string(w.arrival_rate) +
                                " >= service rate " + std::to_string(mu));
    }
    return 1.0 / (mu - w.arrival_rate);
}

namespace {

// Inverse-CDF exponential draw from raw engine output. Avoids
// std::exponential_distribution, whose algorithm is implementation-defined.
double exp_draw(std::mt19937_64& rng, double rate) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
    return -std::log1p(-u) / rate;
}

constexpr std::uint64_t kQueueGuard = 10000;

}  // namespace

double des_oracle(const WorkloadSpec& w, const ServerSpec& s, std::uint64_t n_tasks,
                  std::uint64_t seed) {
    validate(w);
    validate(s);
    if (n_tasks < 1) {
        throw std::domain_error("des_oracle: n_tasks must be >= 1");
    }
    const double mu = task_service_rate(w, s);
    const double lambda = w.arrival_rate;
    if (lambda > 0.0 && lambda >= mu) {
        throw instability_error("des_oracle: arrival rate " + std::to_string(lambda) +
                                " >= service rate " + std::to_string(mu));
    }

    std::mt19937_64 rng(seed);

    if (lambda == 0.0) {
        // Arrivals never overlap; sojourn is pure service time.
        double total = 0.0;
        for (std::uint64_t i = 0; i < n_tasks; ++i) {
            total += exp_draw(rng, mu);
        }
        return total / static_cast<double>(n_tasks);
    }

    // Single server, FIFO. Departure recursion keeps memory at O(queue).
    std::vector<double> departures;  // ring of pending departure times
    departures.reserve(kQueueGuard + 1);
    std::size_t head = 0;

    double arrival = 0.0;
    double last_departure = 0.0;
    double total_sojourn = 0.0;
    for (std::uint64_t i = 0; i < n_tasks; ++i) {
        arrival += exp_draw(rng, lambda);
        while (head < departures.size() && departures[head] <= arrival) {
            ++head;
        }
        if (head > 4096) {  // compact the ring
            departures.erase(departures.begin(), departures.begin() + head);
            head = 0;
        }
        if (departures.size() - head >= kQueueGuard) {
            throw instability_error("des_oracle: queue length guard (" +
                                    std::to_string(kQueueGuard) + ") exceeded");
        }
        const double start = std::max(arrival, last_departure);
        const double departure = start + exp_draw(rng, mu);
        departures.push_back(departure);
        last_departure = departure;
        total_sojourn += departure - arrival;
    }
    return total_sojourn / static_cast<double>(n_tasks);
}

}  // namespace hapdc
