from collections import Counter
from dataclasses import replace

import numpy as np
import pytest

from rts96.network import (
    IslandPartition,
    NetworkError,
    branch_susceptance,
    build_btheta,
    find_islands,
    ptdf,
    write_ptdf_csv,
)


def test_susceptance_examples(case):
    assert branch_susceptance(case.branch("1-L11")) == pytest.approx(20.8333, abs=1e-4)
    assert branch_susceptance(case.branch("1-T01")) == pytest.approx(1 / (0.084 * 1.03), rel=1e-15)
    assert branch_susceptance(case.branch("1-T01")) == pytest.approx(11.558, abs=1e-3)
    br = case.branch("1-L11")
    assert branch_susceptance(replace(br, tap_ratio=1.0)) == branch_susceptance(br)


def test_susceptance_rejects_zero_reactance(case):
    with pytest.raises(NetworkError):
        branch_susceptance(replace(case.branch("1-L11"), x_pu=0.0))


def test_two_islands(case):
    part = find_islands(case)
    assert part.n_islands == 2
    assert part.references == (113, 201)
    assert part.members(0) == [b for b in case.bus_ids if b // 100 == 1]
    assert part.members(1) == [b for b in case.bus_ids if b // 100 != 1]
    assert part.island_of[317] == part.island_of[403]


def test_laplacian_rows_sum_to_zero(case):
    model = build_btheta(case)
    assert np.allclose(model.B_full.sum(axis=1), 0.0, atol=1e-9)


def test_reduced_matrix_is_block_diagonal(case):
    model = build_btheta(case)
    part = find_islands(case)
    ids = np.array(case.bus_ids)[model.non_ref]
    islands = np.array([part.island_of[b] for b in ids])
    assert Counter(islands.tolist()) == {0: 23, 1: 71}
    B = model.B_red
    assert np.all(B[np.ix_(islands == 0, islands == 1)] == 0.0)


def test_kcl_for_injection_against_reference(case):
    model = build_btheta(case)
    idx = case.bus_index()
    p = np.zeros(len(case.buses))
    p[idx[305]] = 1.0
    p[idx[201]] = -1.0
    flows = model.branch_flows(model.solve_angles(p))
    net = model.incidence.T @ flows
    assert np.max(np.abs(net - p)) < 1e-9


def test_ptdf_reference_rows_are_zero(case):
    P = ptdf(case)
    idx = case.bus_index()
    assert P.shape == (96, 156)
    for ref in (113, 201):
        assert np.all(P[idx[ref]] == 0.0)


def test_ptdf_radial_spur(case):
    P = ptdf(case)
    idx = case.bus_index()
    degree = Counter()
    for br in case.ac_branches:
        degree[br.from_bus] += 1
        degree[br.to_bus] += 1
    checked = 0
    for k, br in enumerate(case.ac_branches):
        for leaf, sign in ((br.from_bus, 1.0), (br.to_bus, -1.0)):
            if degree[leaf] == 1 and leaf not in (113, 201):
                assert P[idx[leaf], k] == pytest.approx(sign, abs=1e-12)
                checked += 1
    assert checked == 3  # bus 107, 207, 407; 307 carries a tie


def test_ptdf_matches_direct_solve(case):
    rng = np.random.default_rng(3)
    model = build_btheta(case)
    P = ptdf(case)
    for _ in range(5):
        p = rng.normal(size=len(case.buses))
        direct = model.branch_flows(model.solve_angles(p))
        via = P.T @ p
        assert np.max(np.abs(direct - via)) < 1e-9


def test_flows_invariant_to_reference(case):
    base = find_islands(case)
    moved = IslandPartition(base.island_of, (113, 317))
    rng = np.random.default_rng(11)
    p = rng.normal(size=len(case.buses))
    part = find_islands(case)
    # balance each island so the reference choice carries no net injection
    for k in range(part.n_islands):
        members = [i for i, b in enumerate(case.bus_ids) if part.island_of[b] == k]
        p[members] -= p[members].mean()
    f1 = build_btheta(case, base)
    f2 = build_btheta(case, moved)
    a = f1.branch_flows(f1.solve_angles(p))
    b = f2.branch_flows(f2.solve_angles(p))
    assert np.max(np.abs(a - b)) < 1e-9


def test_balanced_solution_residual(case):
    model = build_btheta(case)
    rng = np.random.default_rng(5)
    p = rng.normal(size=len(case.buses))
    theta = model.solve_angles(p)
    resid = (model.B_full @ theta - p)[model.non_ref]
    assert np.max(np.abs(resid)) < 1e-9


def test_write_ptdf_csv(case, tmp_path):
    path = tmp_path / "ptdf.csv"
    write_ptdf_csv(case, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "branch_id,bus_id,ptdf"
    assert len(lines) == 1 + 156 * 96
