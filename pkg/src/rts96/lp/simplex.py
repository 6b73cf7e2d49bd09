"""Bounded-variable revised simplex with an explicit basis inverse.

Every row ``i`` gets a slack ``s_i`` so that ``A x + s = rhs``; the slack's
bounds encode the sense (``<=``: s >= 0, ``>=``: s <= 0, ``=``: s = 0).
Rows whose slack cannot absorb the initial residual get an artificial column,
and phase 1 minimises the sum of artificials. The pivoting loop itself lives in
a kernel (compiled or numpy, see :mod:`rts96.lp`); this module owns setup,
refactorisation and dual recovery.

The dense inverse is adequate for the clearing problems here (a few hundred
rows and columns); it is the scaling limit of this solver.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from . import kernels
from .problem import LpProblem, LpSolution

BASIC, AT_LOWER, AT_UPPER, FREE = 0, 1, 2, 3
OPTIMAL, UNBOUNDED, LIMIT = 0, 1, 2


@dataclass(frozen=True)
class SimplexConfig:
    pivot_tol: float = 1e-9
    primal_tol: float = 1e-9
    dual_tol: float = 1e-9
    bland_after: int = 200  # consecutive non-improving pivots before Bland's rule
    refactor_every: int = 64
    iteration_factor: int = 50  # pivot limit = factor * (rows + cols)


DEFAULT_CONFIG = SimplexConfig()


class IterationLimitError(RuntimeError):
    pass


class _Tableau:
    def __init__(self, problem: LpProblem, config: SimplexConfig):
        self.config = config
        m, n = problem.n_rows, problem.n_vars
        self.m, self.n = m, n
        A = problem.matrix().tocsc()
        self.b = np.array(problem.rhs, dtype=float)

        lo = np.array(problem.lower, dtype=float)
        hi = np.array(problem.upper, dtype=float)
        state = np.empty(n, dtype=np.int64)
        x = np.zeros(n)
        for j in range(n):
            if np.isfinite(lo[j]):
                x[j], state[j] = lo[j], AT_LOWER
            elif np.isfinite(hi[j]):
                x[j], state[j] = hi[j], AT_UPPER
            else:
                state[j] = FREE

        s_lo = np.zeros(m)
        s_hi = np.zeros(m)
        for i, sense in enumerate(problem.senses):
            if sense == "<=":
                s_hi[i] = np.inf
            elif sense == ">=":
                s_lo[i] = -np.inf
        resid = self.b - A @ x if m else np.zeros(0)
        s_val = np.clip(resid, s_lo, s_hi)
        s_state = np.full(m, BASIC, dtype=np.int64)
        basis = np.arange(n, n + m, dtype=np.int64)
        art_rows = np.flatnonzero(resid != s_val)
        n_art = len(art_rows)
        signs = np.sign(resid[art_rows] - s_val[art_rows])
        for k, i in enumerate(art_rows):
            s_state[i] = AT_LOWER if s_val[i] == s_lo[i] else AT_UPPER
            basis[i] = n + m + k

        self.art = np.arange(n + m, n + m + n_art)
        full = sparse.hstack(
            [
                A,
                sparse.identity(m, format="csc"),
                sparse.csc_matrix((signs, (art_rows, np.arange(n_art))), shape=(m, n_art)),
            ],
            format="csc",
        )
        full.sort_indices()
        self.A = full
        self.indptr = full.indptr.astype(np.int64)
        self.indices = full.indices.astype(np.int64)
        self.data = full.data.astype(float)

        self.lo = np.concatenate([lo, s_lo, np.zeros(n_art)])
        self.hi = np.concatenate([hi, s_hi, np.full(n_art, np.inf)])
        self.x = np.concatenate([x, s_val, np.abs(resid[art_rows] - s_val[art_rows])])
        self.state = np.concatenate([state, s_state, np.full(n_art, BASIC, dtype=np.int64)])
        self.basis = basis
        self.ncols = n + m + n_art
        self.iterations = 0
        self.limit = config.iteration_factor * (m + n)
        self.counters = np.zeros(2, dtype=np.int64)
        self.Binv = np.eye(m)
        self.d = np.zeros(self.ncols)

    def _inverse(self) -> np.ndarray:
        """Basis inverse by eliminating basic slacks (unit columns) first.

        With slack columns ``S`` covering rows ``Srows`` and the rest ``C``,
        only the block of ``C`` on the uncovered rows needs a dense inverse.
        """
        m, n = self.m, self.n
        B = self.A[:, self.basis].tocsr()
        is_slack = (self.basis >= n) & (self.basis < n + m)
        s_pos = np.flatnonzero(is_slack)
        s_rows = self.basis[s_pos] - n
        covered = np.zeros(m, dtype=bool)
        covered[s_rows] = True
        rows = np.flatnonzero(~covered)
        c_pos = np.flatnonzero(~is_slack)
        Binv = np.zeros((m, m))
        if len(c_pos):
            m_inv = np.linalg.inv(B[rows][:, c_pos].toarray())
            Binv[np.ix_(c_pos, rows)] = m_inv
            Binv[np.ix_(s_pos, rows)] = -(B[s_rows][:, c_pos] @ m_inv)
        Binv[s_pos, s_rows] = 1.0
        return Binv

    def refactor(self, cost: np.ndarray) -> None:
        self.Binv = self._inverse() if self.m else np.zeros((0, 0))
        nonbasic = self.state != BASIC
        xn = np.where(nonbasic, self.x, 0.0)
        self.x[self.basis] = self.Binv @ (self.b - self.A @ xn)
        y = cost[self.basis] @ self.Binv
        self.d = cost - self.A.T @ y
        self.d[self.basis] = 0.0
        self.y = y

    def run(self, cost: np.ndarray, kernel) -> int:
        cfg = self.config
        self.counters[:] = 0
        while True:
            self.refactor(cost)
            budget = min(cfg.refactor_every, self.limit - self.iterations)
            if budget <= 0:
                raise IterationLimitError(
                    f"simplex exceeded {self.limit} pivots ({self.m} rows, {self.n} columns)"
                )
            code, its = kernel(
                self.Binv,
                self.basis,
                self.state,
                self.x,
                self.d,
                self.lo,
                self.hi,
                self.indptr,
                self.indices,
                self.data,
                budget,
                cfg.pivot_tol,
                cfg.dual_tol,
                self.counters,
                cfg.bland_after,
            )
            self.iterations += its
            if code == UNBOUNDED:
                return UNBOUNDED
            if code == OPTIMAL and its == 0:
                return OPTIMAL


def solve(problem: LpProblem, config: SimplexConfig = DEFAULT_CONFIG, kernel=None) -> LpSolution:
    """Minimise ``problem``; row duals are d(objective)/d(rhs)."""
    kernel = kernel or kernels.current()
    tab = _Tableau(problem, config)
    n, m = tab.n, tab.m

    if len(tab.art):
        cost1 = np.zeros(tab.ncols)
        cost1[tab.art] = 1.0
        tab.run(cost1, kernel)
        infeas = float(tab.x[tab.art].sum())
        if infeas > 1e-8 * (1.0 + np.abs(tab.b).max(initial=0.0)):
            return LpSolution(
                "infeasible", tab.x[:n].copy(), np.zeros(m), np.zeros(n), np.nan, tab.iterations
            )
        tab.hi[tab.art] = 0.0
        for j in tab.art:
            if tab.state[j] != BASIC:
                tab.state[j] = AT_LOWER
                tab.x[j] = 0.0

    cost = np.zeros(tab.ncols)
    cost[:n] = problem.c
    if tab.run(cost, kernel) == UNBOUNDED:
        return LpSolution(
            "unbounded", tab.x[:n].copy(), np.zeros(m), np.zeros(n), -np.inf, tab.iterations
        )
    x = tab.x[:n].copy()
    return LpSolution(
        status="optimal",
        x=x,
        duals=np.array(tab.y, dtype=float),
        reduced_costs=tab.d[:n].copy(),
        objective=float(np.dot(problem.c, x)),
        iterations=tab.iterations,
    )
