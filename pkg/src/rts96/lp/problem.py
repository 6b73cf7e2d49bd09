"""Linear program container and solution record."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import sparse

INF = float("inf")
SENSES = ("<=", "=", ">=")


@dataclass
class LpProblem:
    """``min c @ x`` subject to ``A x (<=|=|>=) rhs`` and ``lower <= x <= upper``.

    Rows are stored sparsely; build incrementally with :meth:`add_var` and
    :meth:`add_row`, or pass the arrays directly to :meth:`from_arrays`.
    """

    c: List[float] = field(default_factory=list)
    lower: List[float] = field(default_factory=list)
    upper: List[float] = field(default_factory=list)
    var_labels: List[str] = field(default_factory=list)
    rows: List[Tuple[Tuple[int, ...], Tuple[float, ...]]] = field(default_factory=list)
    senses: List[str] = field(default_factory=list)
    rhs: List[float] = field(default_factory=list)
    row_labels: List[str] = field(default_factory=list)

    @property
    def n_vars(self) -> int:
        return len(self.c)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def add_var(self, label: str, lower: float = 0.0, upper: float = INF, cost: float = 0.0) -> int:
        if not np.isfinite(cost):
            raise ValueError(f"variable {label}: objective coefficient must be finite")
        if lower > upper:
            raise ValueError(f"variable {label}: lower bound {lower} above upper bound {upper}")
        self.c.append(float(cost))
        self.lower.append(float(lower))
        self.upper.append(float(upper))
        self.var_labels.append(label)
        return len(self.c) - 1

    def add_row(self, label: str, coefs: Dict[int, float], sense: str, rhs: float) -> int:
        if sense not in SENSES:
            raise ValueError(f"row {label}: unknown sense {sense!r}")
        items = sorted((j, float(v)) for j, v in coefs.items() if v != 0.0)
        self.rows.append((tuple(j for j, _ in items), tuple(v for _, v in items)))
        self.senses.append(sense)
        self.rhs.append(float(rhs))
        self.row_labels.append(label)
        return len(self.rows) - 1

    @classmethod
    def from_arrays(
        cls,
        c: Sequence[float],
        A,
        senses: Sequence[str],
        rhs: Sequence[float],
        lower: Optional[Sequence[float]] = None,
        upper: Optional[Sequence[float]] = None,
    ) -> "LpProblem":
        A = np.atleast_2d(np.asarray(A, dtype=float))
        n = len(c)
        lower = [0.0] * n if lower is None else lower
        upper = [INF] * n if upper is None else upper
        prob = cls()
        for j in range(n):
            prob.add_var(f"x{j}", lower[j], upper[j], c[j])
        for i, row in enumerate(A):
            prob.add_row(f"r{i}", {j: v for j, v in enumerate(row)}, senses[i], rhs[i])
        return prob

    def matrix(self) -> sparse.csr_matrix:
        indptr = [0]
        indices: List[int] = []
        data: List[float] = []
        for cols, vals in self.rows:
            indices.extend(cols)
            data.extend(vals)
            indptr.append(len(indices))
        return sparse.csr_matrix(
            (np.array(data, dtype=float), np.array(indices, dtype=np.int64), np.array(indptr)),
            shape=(self.n_rows, self.n_vars),
        )

    def row_activity(self, x: np.ndarray) -> np.ndarray:
        return self.matrix() @ np.asarray(x, dtype=float)

    def dump(self, path) -> None:
        """Write a plain-text listing for external cross-checks.

        Format, one item per line::

            MIN <label> <cost>            (objective term per variable)
            BOUND <label> <lower> <upper> (inf for unbounded)
            ROW <label> <sense> <rhs> : <var label>*<coef> ...
        """
        with open(path, "w", encoding="utf-8") as fh:
            for j, label in enumerate(self.var_labels):
                fh.write(f"MIN {label} {self.c[j]!r}\n")
            for j, label in enumerate(self.var_labels):
                fh.write(f"BOUND {label} {self.lower[j]!r} {self.upper[j]!r}\n")
            for i, (cols, vals) in enumerate(self.rows):
                terms = " ".join(f"{self.var_labels[j]}*{v!r}" for j, v in zip(cols, vals))
                fh.write(f"ROW {self.row_labels[i]} {self.senses[i]} {self.rhs[i]!r} : {terms}\n")


@dataclass
class LpSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: np.ndarray
    duals: np.ndarray
    reduced_costs: np.ndarray
    objective: float
    iterations: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"
