#include "hapdc/link.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hapdc {

void validate(const LinkConfig& cfg) {
    if (!(cfg.carrier_hz > 0.0) || !(cfg.bandwidth_hz > 0.0)) {
        throw std::domain_error("carrier_hz/bandwidth_hz: must be > 0");
    }
    if (cfg.tx_antennas < 1 || cfg.rx_antennas < cfg.tx_antennas) {
        throw std::domain_error("antennas: need rx_antennas >= tx_antennas >= 1");
    }
    if (!(cfg.distance_m > 0.0) || !(cfg.per_hop_distance_m > 0.0)) {
        throw std::domain_error("distances: must be > 0");
    }
}

double fspl_db(double distance_m, double carrier_hz) {
    if (!(distance_m > 0.0) || !(carrier_hz > 0.0)) {
        throw std::domain_error("fspl_db: distance and carrier must be > 0");
    }
    return 20.0 *
           std::log10(4.0 * std::numbers::pi * distance_m * carrier_hz / kSpeedOfLightMps);
}

namespace {

double capacity_at_distance(const LinkConfig& cfg, double distance_m) {
    const double tx_per_stream_w =
        std::pow(10.0, (cfg.tx_power_dbm - 30.0) / 10.0) / cfg.tx_antennas;
    const double noise_dbm =
        -174.0 + 10.0 * std::log10(cfg.bandwidth_hz) + cfg.noise_figure_db;
    const double noise_w = std::pow(10.0, (noise_dbm - 30.0) / 10.0);
    const double path_loss_lin = std::pow(10.0, fspl_db(distance_m, cfg.carrier_hz) / 10.0);
    const double snr = tx_per_stream_w / (noise_w * path_loss_lin);
    const double zf_gain = cfg.rx_antennas - cfg.tx_antennas + 1;
    return cfg.tx_antennas * cfg.bandwidth_hz * std::log2(1.0 + snr * zf_gain);
}

}  // namespace

double capacity_bps(const LinkConfig& cfg) {
    validate(cfg);
    return capacity_at_distance(cfg, cfg.distance_m);
}

double inter_hap_capacity_bps(const LinkConfig& cfg) {
    validate(cfg);
    return capacity_at_distance(cfg, cfg.per_hop_distance_m);
}

double transmission_rtt(double bits, const LinkConfig& cfg) {
    validate(cfg);
    if (bits < 0.0) {
        throw std::domain_error("transmission_rtt: bits must be >= 0");
    }
    return 2.0 * (bits / capacity_bps(cfg) + cfg.distance_m / kSpeedOfLightMps);
}

double relay_delay(double bits, int hops, const LinkConfig& cfg) {
    validate(cfg);
    if (bits < 0.0 || hops < 0) {
        throw std::domain_error("relay_delay: bits and hops must be >= 0");
    }
    if (hops == 0) {
        return 0.0;
    }
    const double per_hop =
        bits / inter_hap_capacity_bps(cfg) + cfg.per_hop_distance_m / kSpeedOfLightMps;
    return hops * per_hop;
}

LinkStatus outage_check(double offered_bps, const LinkConfig& cfg) {
    validate(cfg);
    if (offered_bps < 0.0) {
        throw std::domain_error("outage_check: offered rate must be >= 0");
    }
    return offered_bps > capacity_bps(cfg) ? LinkStatus::outage : LinkStatus::ok;
}

}  // namespace hapdc
