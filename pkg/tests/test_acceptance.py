"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run standalone with ``python3 tests/test_acceptance.py`` or through pytest.
"""

import hashlib
import os
import subprocess
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

import checks  # noqa: E402
import oracles  # noqa: E402
from rts96.case import build_system, validate  # noqa: E402
from rts96.clearing import ClearingOptions, clear_nodal, clear_zonal, link_loss, pwl_envelope, pwl_error_bound, reduce_zonal  # noqa: E402
from rts96.clearing.losses import quadratic_coef, rating_pu  # noqa: E402
from rts96.lp import LpProblem, check_kkt, solve  # noqa: E402
from rts96.timeseries import generate_year, load_dmax, period_of_day, synth_wind  # noqa: E402

_KKT_SEEN = []


@pytest.fixture
def report(capsys):
    def emit(number, title, passed, detail, elapsed, limit):
        status = "PASS" if passed and elapsed < limit else "FAIL"
        line = f"[{status}] criterion {number}: {title} ({detail}; {elapsed:.2f}s, limit {limit:g}s)"
        with capsys.disabled():
            print("\n" + line)
        assert passed, line
        assert elapsed < limit, line

    return emit


def test_criterion_1_data_fidelity(report):
    t0 = time.perf_counter()
    case = build_system.__wrapped__()
    validation = validate(case)
    counts = tuple(len(getattr(case, k)) for k in ("buses", "loads", "generators", "wind_farms", "ac_branches", "hvdc_links"))
    areas = {}
    for area in (1, 2, 3, 4):
        areas[area] = (
            round(sum(ld.peak_mw for ld in case.loads if ld.bus // 100 == area), 6),
            round(sum(g.pmax_mw for g in case.generators if g.bus // 100 == area), 6),
            round(sum(w.pmax_mw for w in case.wind_farms if w.bus // 100 == area), 6),
        )
    elapsed = time.perf_counter() - t0
    expected = {1: (3135.0, 3405.0, 340.5), 2: (3135.0, 3405.0, 34.06), 3: (3135.0, 3405.0, 272.4), 4: (3135.0, 3405.0, 102.6)}
    ok = validation.ok and counts == (96, 68, 132, 16, 156, 3) and areas == expected
    report(1, "case validate totals and counts", ok, f"counts {counts}, {len(validation.checks)} checks", elapsed, 1.0)


def test_criterion_2_demand_oracle(report):
    t0 = time.perf_counter()
    case = build_system()
    rng = np.random.default_rng(2)
    worst = 0.0
    for _ in range(50):
        hour = int(rng.integers(0, 8760))
        r = float(rng.uniform(0.95, 1.05))
        period = period_of_day(hour // 24 + 1)
        for ld in case.loads:
            ours = load_dmax(ld, period, hour % 24, r)
            ref = oracles.eq1_dmax(ld.peak_mw, ld.i1, ld.i2, hour, r)
            worst = max(worst, abs(ours - ref))
    # the generated series must agree with the same oracle for its own draws
    series = generate_year(case, 42, synth_wind(42))
    n = len(case.loads)
    units = oracles.splitmix64_units(42, 200 * n)
    for h in rng.integers(0, 200, size=50):
        for k, ld in enumerate(case.loads):
            r = 0.95 + 0.1 * units[h * n + k]
            worst = max(worst, abs(series.dmax_mw[h, k] - oracles.eq1_dmax(ld.peak_mw, ld.i1, ld.i2, int(h), r)))
    elapsed = time.perf_counter() - t0
    report(2, "max demand vs independent oracle", worst <= 1e-9, f"max |diff| {worst:.2e} MW", elapsed, 5.0)


def test_criterion_3_loss_oracle(report):
    t0 = time.perf_counter()
    case = build_system()
    worst_exact, bound_ok = 0.0, True
    for link in case.hvdc_links:
        grid = np.linspace(-rating_pu(link), rating_pu(link), 1000)
        ref = np.array([oracles.eq2_lumped_loss(link.id, f) for f in grid])
        worst_exact = max(worst_exact, float(np.max(np.abs(link_loss(link, grid) - ref))))
        for n in (1, 5, 10, 20):
            gap = pwl_envelope(link, n, grid) - link_loss(link, grid)
            bound_ok &= bool(gap.min() >= -1e-15 and gap.max() <= pwl_error_bound(link, n) + 1e-15)
    dc03 = case.link("DC03")
    dc03_bound = quadratic_coef(dc03) * (rating_pu(dc03) / 10) ** 2 / 4
    grid = np.linspace(0, rating_pu(dc03), 1000)
    dc03_gap = float(np.max(pwl_envelope(dc03, 10, grid) - link_loss(dc03, grid)))
    ok = worst_exact <= 1e-12 and bound_ok and dc03_gap <= 0.000945 + 1e-15 and abs(dc03_bound - 0.000945) < 1e-12
    elapsed = time.perf_counter() - t0
    report(3, "HVDC loss oracle and envelope bound", ok, f"max |diff| {worst_exact:.1e} pu, DC03 n=10 gap {dc03_gap:.6f} pu", elapsed, 5.0)


@pytest.fixture(scope="module")
def sampled():
    case = build_system()
    series = generate_year(case, 42, synth_wind(42))
    hours = np.random.default_rng(42).choice(8760, size=24, replace=False)
    zcase = reduce_zonal(case)
    out = []
    t0 = time.perf_counter()
    for h in sorted(int(x) for x in hours):
        lossy = clear_nodal(case, h, series)
        lossless = clear_nodal(case, h, series, ClearingOptions(losses_enabled=False))
        zonal = clear_zonal(zcase, case, h, series)
        out.append((h, lossy, lossless, zonal))
        for res in (lossy, lossless, zonal):
            _KKT_SEEN.append(check_kkt(res.problem, res.solution))
    return case, series, out, time.perf_counter() - t0


def test_criterion_5_clearing_properties(sampled, report):
    case, series, out, build_time = sampled
    t0 = time.perf_counter()
    balance = max(checks.energy_residual_pu(r) for _, a, b, z in out for r in (a, b, z))
    bounds = max(checks.bound_violation_mw(r, case, series) for _, a, b, z in out for r in (a, b, z))
    spreads = [s for _, a, b, _ in out for r in (a, b) for s in checks.island_price_spreads(r, case).values()]
    welfare_ok = all(b.welfare >= a.welfare - 1e-9 for _, a, b, _ in out)
    zonal_ok = all(z.welfare >= a.welfare - 1e-9 * max(1.0, abs(a.welfare)) for _, a, _, z in out)
    ok = balance < 1e-6 and bounds <= 1e-6 and max(spreads) <= 1e-6 and welfare_ok and zonal_ok
    elapsed = build_time + time.perf_counter() - t0
    detail = (
        f"balance {balance:.1e} pu, bounds {bounds:.1e} MW, {len(spreads)} uncongested islands spread "
        f"{max(spreads):.1e}, lossless>=lossy {welfare_ok}, zonal>=nodal {zonal_ok}"
    )
    report(5, "clearing properties on 24 hours", ok, detail, elapsed, 120.0)


def test_criterion_4_lp_kernel(sampled, report):
    t0 = time.perf_counter()
    rng = np.random.default_rng(4)
    worst, kkt_worst = 0.0, 0.0
    for _ in range(200):
        c, A, senses, b, lo, hi = oracles.random_lp(rng)
        prob = LpProblem.from_arrays(c, A, senses, b, lo, hi)
        sol = solve(prob)
        ref, _ = oracles.vertex_enumeration(c, A, senses, b, lo, hi)
        worst = max(worst, abs(sol.objective - ref) if sol.optimal and ref is not None else np.inf)
        kkt_worst = max(kkt_worst, check_kkt(prob, sol).max_residual)
    # clearings solved by the other acceptance checks
    kkt_worst = max([kkt_worst] + [d.max_residual for d in _KKT_SEEN])
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-7 and kkt_worst < 1e-8
    report(4, "simplex vs vertex enumeration and KKT", ok, f"max |obj diff| {worst:.1e}, max KKT residual {kkt_worst:.1e} over {200 + len(_KKT_SEEN)} solves", elapsed, 30.0)


def _digest(directory):
    h = hashlib.sha256()
    for path in sorted(directory.iterdir()):
        h.update(path.name.encode())
        h.update(path.read_bytes())
    return h.hexdigest()


def test_criterion_6_determinism(tmp_path, report):
    t0 = time.perf_counter()
    digests = []
    for run in ("first", "second"):
        out = tmp_path / run
        cmd = [sys.executable, "-m", "rts96.cli", "clear", "--hours", "0..167", "--model", "nodal", "--losses", "on", "--seed", "42", "--wind", "synth", "--out", str(out)]
        proc = subprocess.run(cmd, capture_output=True, text=True, env=dict(os.environ))
        assert proc.returncode == 0, proc.stderr
        digests.append(_digest(out))
    elapsed = time.perf_counter() - t0
    report(6, "byte-identical one-week reruns", digests[0] == digests[1], f"sha256 {digests[0][:12]}", elapsed, 300.0)


def test_criterion_7_asynchronous_areas(report):
    t0 = time.perf_counter()
    case = checks.zero_hvdc(build_system())
    series = generate_year(case, 42, synth_wind(42))
    hour = 4000
    base = clear_nodal(case, hour, series)
    area1 = [b.id for b in case.buses if b.area == 1]
    worst, n = 0.0, 0
    for k, ld in enumerate(case.loads):
        if ld.bus // 100 == 1:
            continue
        dmax = np.array(series.dmax_mw)
        dmax[hour, k] *= 0.5
        moved = clear_nodal(case, hour, checks.with_dmax(series, dmax))
        worst = max(worst, max(abs(moved.prices[b] - base.prices[b]) for b in area1))
        n += 1
    elapsed = time.perf_counter() - t0
    report(7, "Area-1 prices isolated with HVDC ratings zeroed", worst <= 1e-9 and n == 51, f"{n} loads perturbed, max |dprice| {worst:.1e} $/MWh", elapsed, 30.0)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
