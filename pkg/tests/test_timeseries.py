import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from rts96.timeseries import (
    CLASSES,
    HOURS,
    PROFILE_KEYS,
    MissingColumnError,
    ParseError,
    RngStream,
    RowCountError,
    ValueRangeError,
    WindProfiles,
    daily_coeff,
    generate_year,
    load_dmax,
    next_uniform_r,
    period_of_day,
    read_wind_csv,
    synth_wind,
    write_wind_csv,
    yearly_coeff,
)

# frozen sum of every dmax value for seed 42, cross-checked against the scalar oracle
GOLDEN_DMAX_SUM_SEED42 = 43777813.11993271


@pytest.mark.parametrize("day,period", [(1, 1), (15, 1), (16, 2), (45, 3), (46, 4), (59, 4), (60, 5), (365, 24)])
def test_period_examples(day, period):
    assert period_of_day(day) == period


def test_period_matches_calendar():
    for day in range(1, 366):
        assert period_of_day(day) == oracles.period_from_calendar(day)


@pytest.mark.parametrize("day", [0, 366])
def test_period_rejects_out_of_range(day):
    with pytest.raises(ValueError):
        period_of_day(day)


def test_yearly_every_cell():
    for p in range(1, 25):
        for k, cls in enumerate(CLASSES):
            assert yearly_coeff(p, cls) == oracles.YEARLY[p - 1][k]


def test_daily_every_cell():
    for h in range(24):
        for k, cls in enumerate(CLASSES):
            assert daily_coeff(h, cls) == oracles.DAILY[h][k]


@pytest.mark.parametrize(
    "fn,args,value",
    [
        (yearly_coeff, (1, "IND"), 0.731),
        (yearly_coeff, (17, "RES"), 1.000),
        (yearly_coeff, (24, "COM"), 0.670),
        (daily_coeff, (0, "IND"), 0.150),
        (daily_coeff, (19, "RES"), 1.000),
        (daily_coeff, (23, "COM"), 0.220),
    ],
)
def test_coefficient_examples(fn, args, value):
    assert fn(*args) == value


def test_splitmix64_reference_values():
    rng = RngStream(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_rng_matches_plain_integer_oracle():
    rng = RngStream(12345)
    assert [rng.next_unit() for _ in range(200)] == oracles.splitmix64_units(12345, 200)


@given(st.integers(min_value=0, max_value=2**64 - 1), st.integers(min_value=1, max_value=300))
@settings(max_examples=50, deadline=None)
def test_block_equals_scalar_draws(seed, n):
    a, b = RngStream(seed), RngStream(seed)
    block = a.unit_block(n)
    assert block.tolist() == [b.next_unit() for _ in range(n)]
    assert a.state == b.state


def test_uniform_r_range_and_mean():
    r = RngStream(2024).uniform_r_block(10**6)
    assert r.min() >= 0.95 and r.max() <= 1.05
    assert abs(r.mean() - 1.0) <= 0.001


def test_equal_seeds_equal_draws():
    a, b = RngStream(99), RngStream(99)
    assert [next_uniform_r(a) for _ in range(1000)] == [next_uniform_r(b) for _ in range(1000)]


def test_load_dmax_examples(case):
    d01 = case.load("1-D01")
    assert load_dmax(d01, 1, 0, 1.0) == pytest.approx(0.731 * 0.150 * 118.8, abs=1e-12)
    assert load_dmax(d01, 1, 0, 1.0) == pytest.approx(13.0264, abs=1e-4)
    d03 = case.load("1-D03")
    assert load_dmax(d03, 13, 12, 1.0) == pytest.approx(103.634, abs=1e-3)


@given(st.integers(0, 67), st.integers(1, 24), st.integers(0, 23))
@settings(max_examples=100, deadline=None)
def test_load_dmax_linear_in_r(case, k, period, hour):
    ld = case.loads[k]
    base = load_dmax(ld, period, hour, 1.0)
    assert load_dmax(ld, period, hour, 1.05) == pytest.approx(1.05 * base, rel=1e-14, abs=1e-14)


def test_generate_year_matches_oracle(case, series42):
    rng = np.random.default_rng(7)
    n = len(case.loads)
    units = oracles.splitmix64_units(42, HOURS * n)
    for h in rng.integers(0, HOURS, size=50):
        for k, ld in enumerate(case.loads):
            r = 0.95 + 0.1 * units[h * n + k]
            assert abs(series42.dmax_mw[h, k] - oracles.eq1_dmax(ld.peak_mw, ld.i1, ld.i2, int(h), r)) <= 1e-9


def test_generate_year_golden_checksum(series42):
    assert series42.dmax_mw.shape == (HOURS, 68)
    assert math.fsum(series42.dmax_mw.ravel()) == pytest.approx(GOLDEN_DMAX_SUM_SEED42, rel=1e-13)


def test_generate_year_deterministic(case, series42):
    again = generate_year(case, 42, synth_wind(42))
    assert np.array_equal(again.dmax_mw, series42.dmax_mw)
    assert np.array_equal(again.wind_cf, series42.wind_cf)


def test_generate_year_seed_sensitivity(case, series42):
    other = generate_year(case, 43, synth_wind(42))
    assert np.any(other.dmax_mw != series42.dmax_mw)


def test_generate_year_within_r_envelope(case, series42):
    for k, ld in enumerate(case.loads):
        for h in range(0, HOURS, 97):
            env = oracles.eq1_dmax(ld.peak_mw, ld.i1, ld.i2, h, 1.0)
            assert 0.95 * env - 1e-9 <= series42.dmax_mw[h, k] <= 1.05 * env + 1e-9


def test_series_read_only(series42):
    with pytest.raises(ValueError):
        series42.dmax_mw[0, 0] = 1.0


def test_series_write_csv(case, tmp_path):
    s = generate_year(case, 1, synth_wind(1))
    short = type(s)(s.dmax_mw[:2], s.wind_cf[:2], s.seed, s.load_ids, s.farm_ids)
    dmax_path, cf_path = short.write_csv(tmp_path)
    lines = dmax_path.read_text().splitlines()
    assert lines[0] == "hour,load_id,dmax_mw"
    assert len(lines) == 1 + 2 * 68
    assert cf_path.read_text().splitlines()[0] == "hour,farm_id,cf"


def test_synth_wind_properties():
    w = synth_wind(5)
    for key in PROFILE_KEYS:
        assert w[key].shape == (HOURS,)
        assert w[key].min() >= 0.05 and w[key].max() <= 0.95
    again = synth_wind(5)
    assert all(np.array_equal(w[k], again[k]) for k in PROFILE_KEYS)
    means = [w[k].mean() for k in PROFILE_KEYS]
    for i in range(4):
        for j in range(i + 1, 4):
            assert abs(means[i] - means[j]) < 0.1
            assert not np.array_equal(w[PROFILE_KEYS[i]], w[PROFILE_KEYS[j]])


def test_wind_csv_round_trip(tmp_path):
    w = synth_wind(3)
    path = tmp_path / "wind.csv"
    write_wind_csv(w, path)
    back = read_wind_csv(path)
    assert all(np.array_equal(w[k], back[k]) for k in PROFILE_KEYS)


def _write_rows(path, header, rows):
    path.write_text(header + "\n" + "\n".join(rows) + "\n")


def test_wind_csv_row_count(tmp_path):
    path = tmp_path / "short.csv"
    _write_rows(path, "hour,DK1,DK2,SE1,SE4", [f"{h},0.5,0.5,0.5,0.5" for h in range(HOURS - 1)])
    with pytest.raises(RowCountError, match="short.csv"):
        read_wind_csv(path)


def test_wind_csv_range_error_cites_row(tmp_path):
    rows = [f"{h},0.5,0.5,0.5,0.5" for h in range(HOURS)]
    rows[10] = "10,0.5,1.2,0.5,0.5"
    path = tmp_path / "bad.csv"
    _write_rows(path, "hour,DK1,DK2,SE1,SE4", rows)
    with pytest.raises(ValueRangeError, match="row 11"):
        read_wind_csv(path)


def test_wind_csv_missing_column(tmp_path):
    path = tmp_path / "cols.csv"
    _write_rows(path, "hour,DK1,DK2,SE1", [f"{h},0.5,0.5,0.5" for h in range(HOURS)])
    with pytest.raises(MissingColumnError, match="SE4"):
        read_wind_csv(path)


def test_wind_csv_parse_error(tmp_path):
    rows = [f"{h},0.5,0.5,0.5,0.5" for h in range(HOURS)]
    rows[3] = "3,abc,0.5,0.5,0.5"
    path = tmp_path / "parse.csv"
    _write_rows(path, "hour,DK1,DK2,SE1,SE4", rows)
    with pytest.raises(ParseError):
        read_wind_csv(path)


def test_wind_profiles_reject_bad_shape():
    with pytest.raises(ValueError):
        WindProfiles({k: np.zeros(10) for k in PROFILE_KEYS})
