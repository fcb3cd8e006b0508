#pragma once

namespace hapdc {

inline constexpr double kSpeedOfLightMps = 2.998e8;

// Ground-to-HAP MIMO channel, deterministic AWGN line-of-sight (no fading
// draw). Zero-forcing with maximum ratio combining gives each of the tx_antennas
// streams an array gain of (rx_antennas - tx_antennas + 1).
struct LinkConfig {
    double carrier_hz = 31e9;
    double bandwidth_hz = 100e6;
    int tx_antennas = 2;
    int rx_antennas = 16;
    double tx_power_dbm = 33.0;    // total across streams; calibration constant
    double noise_figure_db = 5.0;  // calibration constant
    double distance_m = 20000.0;   // slant range at 20 km altitude
    double per_hop_distance_m = 100000.0;  // inter-HAP hop length
};

void validate(const LinkConfig& cfg);

// Free-space path loss, dB: 20*log10(4*pi*d*f/c).
double fspl_db(double distance_m, double carrier_hz);

// Shannon capacity of the ZF-precoded link, bit/s.
double capacity_bps(const LinkConfig& cfg);

// Capacity of one inter-HAP hop: same model evaluated at per_hop_distance_m.
double inter_hap_capacity_bps(const LinkConfig& cfg);

// Round trip time: serialization plus propagation, both directions symmetric.
double transmission_rtt(double bits, const LinkConfig& cfg);

// Cumulative forwarding delay over an inter-HAP chain. A k-HAP chain has k-1
// hops.
double relay_delay(double bits, int hops, const LinkConfig& cfg);

enum class LinkStatus { ok, outage };

// Outage iff the offered bit rate exceeds link capacity (boundary inclusive).
LinkStatus outage_check(double offered_bps, const LinkConfig& cfg);

}  // namespace hapdc
