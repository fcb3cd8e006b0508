#!/usr/bin/env python3
"""Independent link-budget oracle.

Recomputes the free-space path loss and zero-forcing MIMO capacity numbers
frozen into tests/link_test.cpp, without importing the compiled module. Run it
whenever those golden values need to be re-derived:

    python3 scripts/link_budget_oracle.py
"""

import math

C_MPS = 2.998e8


def fspl_db(distance_m: float, carrier_hz: float) -> float:
    return 20.0 * math.log10(4.0 * math.pi * distance_m * carrier_hz / C_MPS)


def capacity_bps(
    *,
    carrier_hz: float,
    bandwidth_hz: float,
    tx_antennas: int,
    rx_antennas: int,
    tx_power_dbm: float,
    noise_figure_db: float,
    distance_m: float,
) -> float:
    tx_per_stream_w = 10 ** ((tx_power_dbm - 30.0) / 10.0) / tx_antennas
    noise_dbm = -174.0 + 10.0 * math.log10(bandwidth_hz) + noise_figure_db
    noise_w = 10 ** ((noise_dbm - 30.0) / 10.0)
    path_loss = 10 ** (fspl_db(distance_m, carrier_hz) / 10.0)
    snr = tx_per_stream_w / (noise_w * path_loss)
    zf_gain = rx_antennas - tx_antennas + 1
    return tx_antennas * bandwidth_hz * math.log2(1.0 + snr * zf_gain)


def main() -> None:
    ground = dict(
        carrier_hz=31e9,
        bandwidth_hz=100e6,
        tx_antennas=2,
        rx_antennas=16,
        tx_power_dbm=33.0,
        noise_figure_db=5.0,
        distance_m=20000.0,
    )
    inter_hap = dict(ground, carrier_hz=2e9, tx_power_dbm=28.5, distance_m=100000.0)

    c_ground = capacity_bps(**ground)
    c_hop = capacity_bps(**inter_hap)
    print(f"fspl(20 km, 31 GHz)  = {fspl_db(20000.0, 31e9):.10f} dB")
    print(f"fspl(100 km, 2 GHz)  = {fspl_db(100000.0, 2e9):.10f} dB")
    print(f"C_ground (defaults)  = {c_ground:.6f} bit/s")
    print(f"C_hop (2 GHz/28.5 dBm/100 km) = {c_hop:.6f} bit/s")

    bits = 1200.0
    rtt = 2.0 * (bits / c_ground + 20000.0 / C_MPS)
    print(f"rtt(1200 bit)        = {rtt:.12e} s")
    relay = 2.0 * (5e5 / c_hop + 100000.0 / C_MPS)
    print(f"relay(2 hop, 500 kbit) = {relay:.12e} s")


if __name__ == "__main__":
    main()
