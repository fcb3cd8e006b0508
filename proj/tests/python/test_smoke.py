"""Smoke tests for the hapdc python module (C++ core via pybind11)."""

import pytest

import hapdc


def test_constants():
    assert hapdc.SOLAR_CONSTANT_WM2 == 1361.0
    assert hapdc.SPEED_OF_LIGHT_MPS == 2.998e8


def test_payload_cap():
    assert hapdc.max_servers(hapdc.HapConfig(), hapdc.ServerSpec()) == 40


def test_solar_and_link_goldens():
    geo = hapdc.GeoDay()
    geo.latitude_deg = 0.0
    geo.day_of_year = 81
    assert hapdc.daily_harvest_kwh(geo, hapdc.PvConfig()) == pytest.approx(
        33271.224404853114, rel=1e-12
    )
    assert hapdc.capacity_bps(hapdc.LinkConfig()) == pytest.approx(
        5034215.642751128, rel=1e-12
    )
    assert hapdc.fspl_db(200000.0, 31e9) - hapdc.fspl_db(20000.0, 31e9) == pytest.approx(
        20.0, abs=1e-9
    )


def test_flying_condition_clamps_with_full_harvest():
    geo = hapdc.GeoDay()
    geo.latitude_deg = 0.0
    geo.day_of_year = 172
    r = hapdc.flying_condition(
        hapdc.HapConfig(), geo, 40, hapdc.ServerSpec(), hapdc.WorkloadSpec()
    )
    assert r.feasible
    assert r.max_utilization == 1.0
    assert r.max_arrival_rate == pytest.approx(40 * 0.99 * 100.0)


def test_mm1_against_des():
    w = hapdc.WorkloadSpec()
    w.arrival_rate = 50.0
    s = hapdc.ServerSpec()
    analytic = hapdc.mm1_sojourn(w, s)
    empirical = hapdc.des_oracle(w, s, 100000, 45)
    assert empirical == pytest.approx(analytic, rel=0.05)
    assert hapdc.des_oracle(w, s, 100000, 45) == empirical  # bit determinism


def test_config_round_trip():
    cfg = hapdc.load_config_text("", "defaults")
    assert cfg.seed == 42
    dumped = hapdc.dump_config(cfg)
    again = hapdc.load_config_text(dumped, "redump")
    assert hapdc.dump_config(again) == dumped


def test_config_errors_map_to_python():
    with pytest.raises(ValueError, match="unknown key"):
        hapdc.load_config_text('{"bogus": 1}', "test")


def test_savings_and_sweep():
    cfg = hapdc.load_config_text(
        "",
        "defaults",
        ["scenario.terrestrial_fraction=0.05", "hap.harvest_derating=0.01"],
    )
    offered = hapdc.max_rate_offered(cfg.sys, cfg.scenario)
    s = hapdc.savings_percent(cfg.sys, cfg.scenario, offered)
    assert 0.0 < s < 100.0
    points = hapdc.sweep_days(cfg.sys, cfg.scenario, offered)
    assert len(points) == 365
    assert [p.day for p in points[:3]] == [1, 2, 3]


def test_infeasible_savings_raise():
    cfg = hapdc.load_config_text("", "defaults")
    ground = cfg.scenario.terrestrial_servers * 100.0
    with pytest.raises(RuntimeError):
        hapdc.savings_percent(cfg.sys, cfg.scenario, 2.0 * ground)
