"""Optimality certificate check for :class:`LpSolution`."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .problem import LpProblem, LpSolution


@dataclass(frozen=True)
class KktDiagnostics:
    primal: float  # worst row or bound violation
    dual: float  # worst sign violation of reduced costs / row duals
    slackness: float  # worst complementary-slackness product
    stationarity: float  # max |c - A^T y - reduced costs|
    duality_gap: float  # |primal - dual objective| / (1 + |primal|)

    @property
    def max_residual(self) -> float:
        return max(self.primal, self.dual, self.slackness, self.stationarity)

    def ok(self, tol: float = 1e-8, gap_tol: float = 1e-7) -> bool:
        return self.max_residual < tol and self.duality_gap < gap_tol


def check_kkt(problem: LpProblem, solution: LpSolution) -> KktDiagnostics:
    c = np.asarray(problem.c, dtype=float)
    lo = np.asarray(problem.lower, dtype=float)
    hi = np.asarray(problem.upper, dtype=float)
    b = np.asarray(problem.rhs, dtype=float)
    x = np.asarray(solution.x, dtype=float)
    y = np.asarray(solution.duals, dtype=float)
    d = np.asarray(solution.reduced_costs, dtype=float)
    A = problem.matrix()
    act = A @ x
    senses = np.array(problem.senses)
    le, ge, eq = senses == "<=", senses == ">=", senses == "="

    row_viol = np.zeros(len(b))
    row_viol[le] = np.maximum(act[le] - b[le], 0)
    row_viol[ge] = np.maximum(b[ge] - act[ge], 0)
    row_viol[eq] = np.abs(act[eq] - b[eq])
    bound_viol = np.maximum(np.maximum(lo - x, x - hi), 0)
    primal = float(max(row_viol.max(initial=0), bound_viol.max(initial=0)))

    # y = d(obj)/d(rhs): nonpositive on <= rows, nonnegative on >= rows.
    dual_viol = np.zeros(len(b))
    dual_viol[le] = np.maximum(y[le], 0)
    dual_viol[ge] = np.maximum(-y[ge], 0)
    # reduced costs: positive only usable at a finite lower bound, negative at a finite upper one
    rc_viol = np.where(np.isfinite(lo), 0.0, np.maximum(d, 0)) + np.where(
        np.isfinite(hi), 0.0, np.maximum(-d, 0)
    )
    dual = float(max(dual_viol.max(initial=0), rc_viol.max(initial=0)))

    gap_lo = np.where(np.isfinite(lo), x - lo, 0.0)
    gap_hi = np.where(np.isfinite(hi), hi - x, 0.0)
    cs_vars = np.maximum(d, 0) * gap_lo + np.maximum(-d, 0) * gap_hi
    cs_rows = np.abs(y * np.where(eq, 0.0, b - act))
    slackness = float(max(cs_vars.max(initial=0), cs_rows.max(initial=0)))

    stationarity = float(np.abs(c - A.T @ y - d).max(initial=0))

    dual_obj = float(
        b @ y
        + np.sum(np.where(d > 0, d * np.where(np.isfinite(lo), lo, 0.0), 0.0))
        + np.sum(np.where(d < 0, d * np.where(np.isfinite(hi), hi, 0.0), 0.0))
    )
    primal_obj = float(c @ x)
    gap = abs(primal_obj - dual_obj) / (1.0 + abs(primal_obj))
    return KktDiagnostics(primal, dual, slackness, stationarity, gap)
