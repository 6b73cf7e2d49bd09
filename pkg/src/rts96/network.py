"""DC network analytics: islands, B-theta assembly and PTDFs.

The DC approximation ignores resistance, line charging and shunts. Off-nominal
transformer taps scale the series susceptance by ``1/ratio``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .case.model import AcBranch, SystemCase


class NetworkError(ValueError):
    pass


def branch_susceptance(branch: AcBranch) -> float:
    """Series susceptance in pu; ``1/(x*ratio)`` for transformers, ``1/x`` otherwise."""
    if not branch.x_pu > 0:
        raise NetworkError(f"branch {branch.id}: nonpositive reactance {branch.x_pu}")
    if branch.tap_ratio > 0:
        return 1.0 / (branch.x_pu * branch.tap_ratio)
    return 1.0 / branch.x_pu


@dataclass(frozen=True)
class IslandPartition:
    island_of: Dict[int, int]
    references: Tuple[int, ...]

    @property
    def n_islands(self) -> int:
        return len(self.references)

    def members(self, island: int) -> List[int]:
        return sorted(b for b, k in self.island_of.items() if k == island)


def find_islands(case: SystemCase, slack: Optional[int] = None) -> IslandPartition:
    """Breadth-first AC connectivity classes; HVDC links do not connect islands.

    The slack bus references its own island, the lowest-numbered bus any other.
    """
    slack = case.slack_bus if slack is None else slack
    adjacency: Dict[int, List[int]] = {b: [] for b in case.bus_ids}
    for br in case.ac_branches:
        adjacency[br.from_bus].append(br.to_bus)
        adjacency[br.to_bus].append(br.from_bus)

    island_of: Dict[int, int] = {}
    seeds = [slack] + sorted(b for b in adjacency if b != slack)
    count = 0
    for seed in seeds:
        if seed in island_of:
            continue
        island_of[seed] = count
        queue = deque([seed])
        while queue:
            bus = queue.popleft()
            for nxt in adjacency[bus]:
                if nxt not in island_of:
                    island_of[nxt] = count
                    queue.append(nxt)
        count += 1

    refs = []
    for k in range(count):
        members = [b for b, i in island_of.items() if i == k]
        refs.append(slack if slack in members else min(members))
    return IslandPartition(island_of, tuple(refs))


@dataclass
class BThetaModel:
    """Nodal susceptance model over all buses, with the reduced (non-reference) system.

    ``B_full`` is the Laplacian over every bus in case order; ``B_red`` drops the
    reference rows/columns. ``Bf`` maps bus angles to branch flows (pu).
    """

    bus_ids: Tuple[int, ...]
    branch_ids: Tuple[str, ...]
    B_full: np.ndarray
    Bf: np.ndarray
    b_branch: np.ndarray
    incidence: np.ndarray
    non_ref: np.ndarray
    base_mva: float = 100.0
    _factor: tuple = field(default=None, repr=False)

    @property
    def B_red(self) -> np.ndarray:
        return self.B_full[np.ix_(self.non_ref, self.non_ref)]

    def _cho(self):
        if self._factor is None:
            try:
                self._factor = cho_factor(self.B_red)
            except np.linalg.LinAlgError as exc:
                raise NetworkError("singular susceptance matrix; check the island partition") from exc
        return self._factor

    def solve_angles(self, injections_pu: np.ndarray) -> np.ndarray:
        """Angles (rad) for the given bus injections; references held at 0."""
        theta = np.zeros(len(self.bus_ids))
        theta[self.non_ref] = cho_solve(self._cho(), np.asarray(injections_pu)[self.non_ref])
        return theta

    def branch_flows(self, theta: np.ndarray) -> np.ndarray:
        return self.Bf @ theta


def build_btheta(case: SystemCase, partition: Optional[IslandPartition] = None) -> BThetaModel:
    partition = partition or find_islands(case)
    index = case.bus_index()
    nb, nl = len(case.buses), len(case.ac_branches)
    incidence = np.zeros((nl, nb))
    b = np.empty(nl)
    for k, br in enumerate(case.ac_branches):
        incidence[k, index[br.from_bus]] = 1.0
        incidence[k, index[br.to_bus]] = -1.0
        b[k] = branch_susceptance(br)
    Bf = b[:, None] * incidence
    B_full = incidence.T @ Bf
    refs = {index[r] for r in partition.references}
    non_ref = np.array([i for i in range(nb) if i not in refs], dtype=int)
    model = BThetaModel(
        bus_ids=case.bus_ids,
        branch_ids=tuple(br.id for br in case.ac_branches),
        B_full=B_full,
        Bf=Bf,
        b_branch=b,
        incidence=incidence,
        non_ref=non_ref,
        base_mva=case.base_mva,
    )
    model._cho()
    return model


def ptdf(case: SystemCase, partition: Optional[IslandPartition] = None) -> np.ndarray:
    """Bus-by-branch sensitivities, with withdrawal at each island's reference.

    Entry ``[i, k]`` is the flow on branch ``k`` per pu injected at bus ``i``.
    """
    model = build_btheta(case, partition)
    nb = len(model.bus_ids)
    sens = np.zeros((nb, nb))
    sens[np.ix_(model.non_ref, model.non_ref)] = cho_solve(model._cho(), np.eye(len(model.non_ref)))
    return (model.Bf @ sens).T


def write_ptdf_csv(case: SystemCase, path, partition: Optional[IslandPartition] = None) -> None:
    import csv

    matrix = ptdf(case, partition)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["branch_id", "bus_id", "ptdf"])
        for k, br in enumerate(case.ac_branches):
            for i, bus in enumerate(case.bus_ids):
                writer.writerow([br.id, bus, repr(float(matrix[i, k]))])
