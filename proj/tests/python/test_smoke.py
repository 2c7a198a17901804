"""Smoke tests for the compiled bindings: fixtures, determinism, shapes."""

import math

import pytest

import acorr


def test_acf_hand_fixture():
    r = acorr.acf([1, 2, 3, 4, 5], max_lag=2)
    assert r["n"] == 5
    assert r["coefficients"][0] == pytest.approx(0.4, abs=1e-12)
    assert r["coefficients"][1] == pytest.approx(-0.1, abs=1e-12)
    assert r["band_half_width"] == pytest.approx(acorr.confidence_band(5, 0.05), abs=1e-15)


def test_ljung_box_hand_fixture():
    lb = acorr.ljung_box([1, 2, 3, 4, 5], max_lag=2)
    assert lb["q_values"][0] == pytest.approx(1.4, abs=1e-9)
    assert lb["q_values"][1] == pytest.approx(1.5166667, abs=1e-6)
    assert lb["p_values"][1] == pytest.approx(0.46846, abs=1e-4)
    assert lb["reject"] == [False, False]


def test_chi2_round_trip():
    assert acorr.chi2_quantile(0.95, 2) == pytest.approx(5.9914645, abs=1e-6)
    for p in (0.01, 0.5, 0.975):
        for k in (1, 7, 40):
            assert acorr.chi2_cdf(acorr.chi2_quantile(p, k), k) == pytest.approx(p, abs=1e-9)
    assert acorr.chi2_sf(3.0, 2) == pytest.approx(1.0 - acorr.chi2_cdf(3.0, 2), abs=1e-12)


def test_normal_quantile_symmetry():
    assert acorr.normal_quantile(0.975) == pytest.approx(1.959963985, abs=1e-8)
    assert acorr.normal_quantile(0.025) == pytest.approx(-acorr.normal_quantile(0.975), abs=1e-13)


def test_generate_series_is_deterministic():
    a = acorr.generate_series("ar1", n=200, seed=9, phi=0.5)
    b = acorr.generate_series("ar1", n=200, seed=9, phi=0.5)
    assert a == b
    assert len(a) == 200
    c = acorr.generate_series("ar1", n=200, seed=10, phi=0.5)
    assert a != c
    assert acorr.theoretical_acf_ar1(0.5, 3) == pytest.approx(0.125)


def test_aggregate_trades_smoke():
    ts = [0, 60_000, 240_000, 301_000]
    prices = [10.0, 12.0, 9.0, 11.0]
    sizes = [1.0, 2.0, 1.0, 5.0]
    bars = acorr.aggregate_trades(ts, prices, sizes, "5m")
    assert bars["open_time"] == [0, 300_000]
    assert bars["open"] == [10.0, 11.0]
    assert bars["high"] == [12.0, 11.0]
    assert bars["low"] == [9.0, 11.0]
    assert bars["close"] == [9.0, 11.0]
    assert bars["volume"] == [4.0, 5.0]
    assert bars["trade_count"] == [3, 1]


def test_returns_from_closes():
    r = acorr.returns_from_closes([100.0, 110.0, 99.0], kind="log")
    assert r[0] == pytest.approx(math.log(1.1), abs=1e-12)
    s = acorr.returns_from_closes([100.0, 110.0], kind="simple")
    assert s[0] == pytest.approx(0.1, abs=1e-12)


def test_rolling_acf1_gap_is_nan():
    values = [1.0, 2.0, 3.0, 7.0, 7.0, 7.0, 7.0, 2.0, 5.0, 1.0]
    r1 = acorr.rolling_acf1(values, window_len=4)
    assert len(r1) == 7
    assert math.isnan(r1[3])  # the all-constant window
    assert not math.isnan(r1[0])


def test_rolling_whole_series_matches_acf():
    values = acorr.generate_series("white", n=100, seed=5)
    whole = acorr.rolling_acf1(values, window_len=100)
    assert whole == [acorr.acf(values, max_lag=1)["coefficients"][0]]


def test_time_helpers():
    assert acorr.bucket_start(3_900_000, "1h") == 3_600_000
    assert acorr.format_iso8601(86_400_000) == "1970-01-02T00:00:00Z"
    assert acorr.parse_iso8601("1970-01-02T00:00:00Z") == 86_400_000
