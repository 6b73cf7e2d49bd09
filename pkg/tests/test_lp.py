import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from rts96 import lp
from rts96.lp import INF, IterationLimitError, LpProblem, SimplexConfig, check_kkt, kernels, solve


def _problem(c, A, senses, b, lo, hi):
    return LpProblem.from_arrays(c, A, senses, b, lo, hi)


def test_one_variable():
    prob = LpProblem()
    x = prob.add_var("x", 0.0, INF, -1.0)
    prob.add_row("cap", {x: 1.0}, "<=", 3.0)
    sol = solve(prob)
    assert sol.optimal
    assert sol.x[0] == pytest.approx(3.0)
    assert sol.duals[0] == pytest.approx(-1.0)
    assert sol.objective == pytest.approx(-3.0)


def test_contradictory_rows_infeasible():
    prob = LpProblem()
    x = prob.add_var("x")
    prob.add_row("lo", {x: 1.0}, ">=", 2.0)
    prob.add_row("hi", {x: 1.0}, "<=", 1.0)
    assert solve(prob).status == "infeasible"


def test_unbounded():
    prob = LpProblem()
    x = prob.add_var("x", 0.0, INF, -1.0)
    y = prob.add_var("y", 0.0, INF, 0.0)
    prob.add_row("r", {x: 1.0, y: -1.0}, "<=", 1.0)
    assert solve(prob).status == "unbounded"


def test_free_variable_and_equality():
    prob = LpProblem()
    x = prob.add_var("x", -INF, INF, 1.0)
    y = prob.add_var("y", 0.0, 4.0, 2.0)
    prob.add_row("sum", {x: 1.0, y: 1.0}, "=", 5.0)
    prob.add_row("xmin", {x: 1.0}, ">=", 2.0)
    sol = solve(prob)
    assert sol.optimal
    assert sol.x.tolist() == pytest.approx([5.0, 0.0])
    assert check_kkt(prob, sol).ok()


def test_add_var_rejects_inverted_bounds():
    with pytest.raises(ValueError):
        LpProblem().add_var("x", 2.0, 1.0)


def test_add_row_rejects_unknown_sense():
    prob = LpProblem()
    x = prob.add_var("x")
    with pytest.raises(ValueError):
        prob.add_row("r", {x: 1.0}, "<", 1.0)


@pytest.mark.parametrize("kernel", sorted(kernels.AVAILABLE))
def test_random_lps_match_vertex_enumeration(kernel):
    rng = np.random.default_rng(20240)
    with kernels.use(kernel):
        for _ in range(200):
            c, A, senses, b, lo, hi = oracles.random_lp(rng)
            prob = _problem(c, A, senses, b, lo, hi)
            sol = solve(prob)
            ref, _ = oracles.vertex_enumeration(c, A, senses, b, lo, hi)
            assert sol.optimal and ref is not None
            assert abs(sol.objective - ref) <= 1e-7
            assert check_kkt(prob, sol).ok()


def test_random_infeasible_lps():
    rng = np.random.default_rng(8)
    for _ in range(30):
        prob = _problem(*oracles.random_lp(rng, feasible=False))
        assert solve(prob).status == "infeasible"


def _value(c, A, senses, b, lo, hi):
    sol = solve(_problem(c, A, senses, b, lo, hi))
    return sol.objective if sol.optimal else INF


def test_duals_are_subgradients_of_value_function():
    rng = np.random.default_rng(77)
    eps = 1e-4
    for _ in range(60):
        c, A, senses, b, lo, hi = oracles.random_lp(rng)
        sol = solve(_problem(c, A, senses, b, lo, hi))
        for i in range(len(b)):
            for step in (eps, -eps):
                bb = b.copy()
                bb[i] += step
                assert _value(c, A, senses, bb, lo, hi) >= sol.objective + step * sol.duals[i] - 1e-9


def test_kkt_flags_perturbed_point():
    rng = np.random.default_rng(4)
    flagged = 0
    for _ in range(20):
        c, A, senses, b, lo, hi = oracles.random_lp(rng)
        prob = _problem(c, A, senses, b, lo, hi)
        sol = solve(prob)
        assert check_kkt(prob, sol).max_residual < 1e-8
        bad = sol.x.copy()
        bad[0] += 0.1
        diag = check_kkt(prob, type(sol)(sol.status, bad, sol.duals, sol.reduced_costs, sol.objective, 0))
        flagged += max(diag.primal, diag.slackness) > 1e-3
    assert flagged == 20


def test_deterministic():
    rng = np.random.default_rng(1)
    prob = _problem(*oracles.random_lp(rng))
    a, b = solve(prob), solve(prob)
    assert np.array_equal(a.x, b.x) and np.array_equal(a.duals, b.duals)


@pytest.mark.skipif("cython" not in kernels.AVAILABLE, reason="compiled kernel not built")
def test_kernels_agree():
    rng = np.random.default_rng(123)
    for _ in range(100):
        prob = _problem(*oracles.random_lp(rng))
        with kernels.use("python"):
            a = solve(prob)
        with kernels.use("cython"):
            b = solve(prob)
        assert a.status == b.status
        assert a.objective == pytest.approx(b.objective, abs=1e-9)


def test_kernel_selection():
    with pytest.raises(ValueError):
        kernels.set_kernel("fortran")
    before = kernels.name()
    with kernels.use("python"):
        assert kernels.name() == "python"
    assert kernels.name() == before


def test_iteration_limit():
    rng = np.random.default_rng(2)
    prob = _problem(*oracles.random_lp(rng, max_vars=6, max_rows=6))
    with pytest.raises(IterationLimitError):
        solve(prob, SimplexConfig(iteration_factor=0))


def test_degenerate_cycling_example():
    # Beale's example; cycles under textbook Dantzig pricing without anti-cycling
    prob = LpProblem.from_arrays(
        [-0.75, 150.0, -0.02, 6.0],
        [[0.25, -60.0, -0.04, 9.0], [0.5, -90.0, -0.02, 3.0], [0.0, 0.0, 1.0, 0.0]],
        ["<=", "<=", "<="],
        [0.0, 0.0, 1.0],
        [0.0] * 4,
        [INF] * 4,
    )
    sol = solve(prob, SimplexConfig(bland_after=1))
    assert sol.optimal
    assert sol.objective == pytest.approx(-0.05)


@given(st.lists(st.floats(-5, 5), min_size=2, max_size=2), st.floats(0.5, 10))
@settings(max_examples=50, deadline=None)
def test_simplex_objective_two_var_box(c, cap):
    prob = LpProblem.from_arrays(c, [[1.0, 1.0]], ["<="], [cap], [0.0, 0.0], [cap, cap])
    sol = solve(prob)
    best = min(0.0, c[0] * cap, c[1] * cap)
    assert sol.objective == pytest.approx(best, abs=1e-9)


def test_dump(tmp_path):
    prob = LpProblem()
    x = prob.add_var("x", 0.0, 3.0, -1.0)
    prob.add_row("cap", {x: 1.0}, "<=", 2.0)
    path = tmp_path / "p.lp"
    prob.dump(path)
    assert "cap" in path.read_text()


def test_lp_exports():
    assert lp.solve is solve
