"""Nodal DC-OPF market clearing with elastic demand and HVDC losses.

All LP quantities are per unit on the system base; objective coefficients are
scaled by ``base_mva`` so the objective is in $/h and a balance-row dual
divided by ``base_mva`` is a price in $/MWh.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from .. import lp
from ..case.model import SystemCase
from ..network import build_btheta, find_islands
from ..timeseries import SnapshotSeries
from . import losses

FLOW_TOL_MW = 1e-6


class ClearingError(RuntimeError):
    pass


@dataclass(frozen=True)
class ClearingOptions:
    losses_enabled: bool = True
    pwl_segments: int = 10
    price_unit: str = "$/MWh"

    def __post_init__(self):
        if self.pwl_segments < 1:
            raise ValueError("pwl_segments must be >= 1")


@dataclass
class _Layout:
    gen: np.ndarray
    wind: np.ndarray
    load: np.ndarray
    angle: Dict[int, int]  # bus position -> variable
    f_pos: np.ndarray
    f_neg: np.ndarray
    loss: np.ndarray  # -1 when losses are off
    balance_rows: np.ndarray
    d_max_pu: np.ndarray
    wind_max_pu: np.ndarray


@dataclass
class DispatchResult:
    hour: int
    gen_mw: Dict[str, float]
    wind_mw: Dict[str, float]
    load_mw: Dict[str, float]
    branch_flow_mw: Dict[str, float]
    link_flow_mw: Dict[str, float]
    link_loss_mw: Dict[str, float]
    prices: Dict[int, float]
    welfare: float
    binding: List[str]
    warnings: List[str] = field(default_factory=list)
    problem: lp.LpProblem = field(default=None, repr=False)
    solution: lp.LpSolution = field(default=None, repr=False)

    @property
    def objective(self) -> float:
        return self.welfare

    @property
    def total_loss_mw(self) -> float:
        return float(sum(self.link_loss_mw.values()))


def check_inputs(case: SystemCase, hour: int, series: SnapshotSeries) -> None:
    if not 0 <= hour < series.hours:
        raise ClearingError(f"unknown hour {hour}; series covers 0..{series.hours - 1}")
    if series.load_ids != tuple(ld.id for ld in case.loads) or series.farm_ids != tuple(
        w.id for w in case.wind_farms
    ):
        raise ClearingError("snapshot series was generated for a different case")


def add_market_vars(prob: lp.LpProblem, case: SystemCase, hour: int, series: SnapshotSeries):
    """Generator, wind and load variables shared by the nodal and zonal models."""
    base = case.base_mva
    gen = [
        prob.add_var(f"p[{g.id}]", 0.0, g.pmax_mw / base, g.cost_usd_per_mwh * base)
        for g in case.generators
    ]
    wind_max = np.asarray(series.wind_cf[hour]) * np.array([w.pmax_mw for w in case.wind_farms]) / base
    wind = [prob.add_var(f"w[{w.id}]", 0.0, wind_max[k]) for k, w in enumerate(case.wind_farms)]
    d_max = np.asarray(series.dmax_mw[hour]) / base
    load = [
        prob.add_var(f"d[{ld.id}]", 0.0, d_max[k], -ld.utility_usd_per_mwh * base)
        for k, ld in enumerate(case.loads)
    ]
    return np.array(gen), np.array(wind), np.array(load), d_max, wind_max


def add_link_vars(prob: lp.LpProblem, links, options: ClearingOptions, base: float):
    f_pos, f_neg, loss = [], [], []
    for link in links:
        cap = losses.rating_pu(link, base)
        f_pos.append(prob.add_var(f"f+[{link.id}]", 0.0, cap))
        f_neg.append(prob.add_var(f"f-[{link.id}]", 0.0, cap))
        if options.losses_enabled:
            loss.append(prob.add_var(f"loss[{link.id}]", 0.0, losses.max_loss(link, base)))
        else:
            loss.append(-1)
    return np.array(f_pos, dtype=int), np.array(f_neg, dtype=int), np.array(loss, dtype=int)


def add_loss_rows(prob: lp.LpProblem, links, f_pos, f_neg, loss, options: ClearingOptions, base: float):
    if not options.losses_enabled:
        return
    for k, link in enumerate(links):
        const = losses.constant_loss(link)
        for s, (slope, intercept) in enumerate(losses.pwl_loss_curve(link, options.pwl_segments, base)):
            prob.add_row(
                f"pwl[{link.id},{s}]",
                {int(loss[k]): 1.0, int(f_pos[k]): -slope, int(f_neg[k]): -slope},
                ">=",
                intercept + const,
            )


def _assemble(case: SystemCase, hour: int, series: SnapshotSeries, options: ClearingOptions):
    check_inputs(case, hour, series)
    base = case.base_mva
    partition = find_islands(case)
    model = build_btheta(case, partition)
    index = case.bus_index()
    prob = lp.LpProblem()

    gen, wind, load, d_max, wind_max = add_market_vars(prob, case, hour, series)
    angle = {}
    for pos in model.non_ref:
        angle[int(pos)] = prob.add_var(f"theta[{case.buses[pos].id}]", -lp.INF, lp.INF)
    f_pos, f_neg, loss = add_link_vars(prob, case.hvdc_links, options, base)

    nb = len(case.buses)
    rows: List[Dict[int, float]] = [dict() for _ in range(nb)]
    for k, g in enumerate(case.generators):
        rows[index[g.bus]][int(gen[k])] = 1.0
    for k, w in enumerate(case.wind_farms):
        rows[index[w.bus]][int(wind[k])] = 1.0
    for k, ld in enumerate(case.loads):
        rows[index[ld.bus]][int(load[k])] = -1.0
    B = model.B_full
    for i in range(nb):
        for j in np.flatnonzero(B[i]):
            if int(j) in angle:
                rows[i][angle[int(j)]] = rows[i].get(angle[int(j)], 0.0) - B[i, j]
    for k, link in enumerate(case.hvdc_links):
        src, dst = rows[index[link.from_bus]], rows[index[link.to_bus]]
        src[int(f_pos[k])] = -1.0
        src[int(f_neg[k])] = 1.0
        dst[int(f_pos[k])] = 1.0
        dst[int(f_neg[k])] = -1.0
        if loss[k] >= 0:
            dst[int(loss[k])] = -1.0
    balance = np.array(
        [prob.add_row(f"balance[{case.buses[i].id}]", rows[i], "=", 0.0) for i in range(nb)]
    )

    for k, br in enumerate(case.ac_branches):
        coefs = {}
        for pos in (index[br.from_bus], index[br.to_bus]):
            if pos in angle:
                coefs[angle[pos]] = model.Bf[k, pos]
        limit = br.rating_mva / base
        prob.add_row(f"flowmax[{br.id}]", coefs, "<=", limit)
        prob.add_row(f"flowmin[{br.id}]", coefs, ">=", -limit)

    add_loss_rows(prob, case.hvdc_links, f_pos, f_neg, loss, options, base)
    layout = _Layout(gen, wind, load, angle, f_pos, f_neg, loss, balance, d_max, wind_max)
    return prob, layout, model


def build_nodal_lp(
    case: SystemCase, hour: int, series: SnapshotSeries, options: ClearingOptions = ClearingOptions()
) -> lp.LpProblem:
    return _assemble(case, hour, series, options)[0]


def link_results(case_links, x, f_pos, f_neg, loss, base, options, warnings):
    flow, loss_mw = {}, {}
    for k, link in enumerate(case_links):
        fp, fn = x[f_pos[k]], x[f_neg[k]]
        flow[link.id] = (fp - fn) * base
        loss_mw[link.id] = x[loss[k]] * base if loss[k] >= 0 else 0.0
        if options.losses_enabled and min(fp, fn) * base > FLOW_TOL_MW:
            warnings.append(f"{link.id}: simultaneous flow in both directions")
    return flow, loss_mw


def clear_nodal(
    case: SystemCase, hour: int, series: SnapshotSeries, options: ClearingOptions = ClearingOptions()
) -> DispatchResult:
    prob, layout, model = _assemble(case, hour, series, options)
    sol = lp.solve(prob)
    if not sol.optimal:
        raise ClearingError(f"hour {hour}: clearing LP {sol.status}")
    base = case.base_mva
    x = sol.x

    theta = np.zeros(len(case.buses))
    for pos, var in layout.angle.items():
        theta[pos] = x[var]
    branch_flow = model.Bf @ theta * base
    warnings: List[str] = []
    link_flow, link_loss = link_results(
        case.hvdc_links, x, layout.f_pos, layout.f_neg, layout.loss, base, options, warnings
    )

    binding = [
        f"branch:{br.id}"
        for k, br in enumerate(case.ac_branches)
        if abs(branch_flow[k]) >= br.rating_mva - FLOW_TOL_MW
    ]
    binding += [
        f"link:{lk.id}"
        for lk in case.hvdc_links
        if lk.rating_mw > 0 and abs(link_flow[lk.id]) >= lk.rating_mw - FLOW_TOL_MW
    ]
    prices = {b.id: float(sol.duals[row] / base) for b, row in zip(case.buses, layout.balance_rows)}
    return DispatchResult(
        hour=hour,
        gen_mw={g.id: float(x[v] * base) for g, v in zip(case.generators, layout.gen)},
        wind_mw={w.id: float(x[v] * base) for w, v in zip(case.wind_farms, layout.wind)},
        load_mw={ld.id: float(x[v] * base) for ld, v in zip(case.loads, layout.load)},
        branch_flow_mw={br.id: float(branch_flow[k]) for k, br in enumerate(case.ac_branches)},
        link_flow_mw={k: float(v) for k, v in link_flow.items()},
        link_loss_mw={k: float(v) for k, v in link_loss.items()},
        prices=prices,
        welfare=-sol.objective,
        binding=binding,
        warnings=warnings,
        problem=prob,
        solution=sol,
    )
