"""Four-zone transport-model clearing (one node per area).

Cross-border AC ties between the same pair of zones collapse into one
corridor whose capacity is the sum of their ratings; each HVDC link stays a
corridor of its own and keeps its loss model.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .. import lp
from ..case.model import HvdcLink, SystemCase
from ..timeseries import SnapshotSeries
from .nodal import (
    FLOW_TOL_MW,
    ClearingError,
    ClearingOptions,
    add_link_vars,
    add_loss_rows,
    add_market_vars,
    check_inputs,
    link_results,
)


@dataclass(frozen=True)
class Corridor:
    id: str
    from_zone: int
    to_zone: int
    capacity_mw: float
    link: Optional[HvdcLink] = None
    members: Tuple[str, ...] = ()

    @property
    def is_hvdc(self) -> bool:
        return self.link is not None


@dataclass(frozen=True)
class ZonalCase:
    zones: Tuple[int, ...]
    corridors: Tuple[Corridor, ...]
    zone_of_bus: Dict[int, int]

    def corridor(self, corridor_id: str) -> Corridor:
        for c in self.corridors:
            if c.id == corridor_id:
                return c
        raise KeyError(corridor_id)

    def members(self, zone: int) -> List[int]:
        return sorted(b for b, z in self.zone_of_bus.items() if z == zone)


def reduce_zonal(case: SystemCase) -> ZonalCase:
    zone_of_bus = {b.id: b.area for b in case.buses}
    corridors = []
    for link in case.hvdc_links:
        a, b = zone_of_bus[link.from_bus], zone_of_bus[link.to_bus]
        corridors.append(Corridor(f"Z{a}-Z{b}", a, b, link.rating_mw, link, (link.id,)))
    ties: Dict[Tuple[int, int], List] = defaultdict(list)
    for br in case.ac_branches:
        a, b = zone_of_bus[br.from_bus], zone_of_bus[br.to_bus]
        if a != b:
            ties[(a, b)].append(br)
    for (a, b), brs in sorted(ties.items()):
        corridors.append(
            Corridor(f"Z{a}-Z{b}", a, b, sum(br.rating_mva for br in brs), None, tuple(br.id for br in brs))
        )
    zones = tuple(sorted(set(zone_of_bus.values())))
    return ZonalCase(zones, tuple(corridors), zone_of_bus)


@dataclass
class ZonalResult:
    hour: int
    net_position_mw: Dict[int, float]
    corridor_flow_mw: Dict[str, float]
    corridor_loss_mw: Dict[str, float]
    link_loss_mw: Dict[str, float]
    prices: Dict[int, float]
    welfare: float
    binding: List[str]
    gen_mw: Dict[str, float] = field(default_factory=dict)
    wind_mw: Dict[str, float] = field(default_factory=dict)
    load_mw: Dict[str, float] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)
    problem: lp.LpProblem = field(default=None, repr=False)
    solution: lp.LpSolution = field(default=None, repr=False)

    @property
    def objective(self) -> float:
        return self.welfare

    @property
    def total_loss_mw(self) -> float:
        return float(sum(self.link_loss_mw.values()))


def clear_zonal(
    zcase: ZonalCase,
    case: SystemCase,
    hour: int,
    series: SnapshotSeries,
    options: ClearingOptions = ClearingOptions(),
) -> ZonalResult:
    check_inputs(case, hour, series)
    base = case.base_mva
    prob = lp.LpProblem()
    gen, wind, load, _, _ = add_market_vars(prob, case, hour, series)

    ac = [c for c in zcase.corridors if not c.is_hvdc]
    hv = [c for c in zcase.corridors if c.is_hvdc]
    ac_vars = [prob.add_var(f"f[{c.id}]", -c.capacity_mw / base, c.capacity_mw / base) for c in ac]
    links = [c.link for c in hv]
    f_pos, f_neg, loss = add_link_vars(prob, links, options, base)

    zrow = {z: {} for z in zcase.zones}
    zone = zcase.zone_of_bus
    for k, g in enumerate(case.generators):
        zrow[zone[g.bus]][int(gen[k])] = 1.0
    for k, w in enumerate(case.wind_farms):
        zrow[zone[w.bus]][int(wind[k])] = 1.0
    for k, ld in enumerate(case.loads):
        zrow[zone[ld.bus]][int(load[k])] = -1.0
    for c, v in zip(ac, ac_vars):
        zrow[c.from_zone][v] = -1.0
        zrow[c.to_zone][v] = 1.0
    for k, c in enumerate(hv):
        zrow[c.from_zone][int(f_pos[k])] = -1.0
        zrow[c.from_zone][int(f_neg[k])] = 1.0
        zrow[c.to_zone][int(f_pos[k])] = 1.0
        zrow[c.to_zone][int(f_neg[k])] = -1.0
        if loss[k] >= 0:
            zrow[c.to_zone][int(loss[k])] = -1.0
    rows = {z: prob.add_row(f"balance[Z{z}]", zrow[z], "=", 0.0) for z in zcase.zones}
    add_loss_rows(prob, links, f_pos, f_neg, loss, options, base)

    sol = lp.solve(prob)
    if not sol.optimal:
        raise ClearingError(f"hour {hour}: zonal clearing LP {sol.status}")
    x = sol.x
    warnings: List[str] = []
    link_flow, link_loss = link_results(links, x, f_pos, f_neg, loss, base, options, warnings)

    flows = {c.id: float(x[v] * base) for c, v in zip(ac, ac_vars)}
    corridor_loss = {c.id: 0.0 for c in ac}
    for c in hv:
        flows[c.id] = float(link_flow[c.link.id])
        corridor_loss[c.id] = float(link_loss[c.link.id])
    flows = {c.id: flows[c.id] for c in zcase.corridors}
    corridor_loss = {c.id: corridor_loss[c.id] for c in zcase.corridors}

    net = {z: 0.0 for z in zcase.zones}
    gen_mw = {g.id: float(x[v] * base) for g, v in zip(case.generators, gen)}
    wind_mw = {w.id: float(x[v] * base) for w, v in zip(case.wind_farms, wind)}
    load_mw = {ld.id: float(x[v] * base) for ld, v in zip(case.loads, load)}
    for g in case.generators:
        net[zone[g.bus]] += gen_mw[g.id]
    for w in case.wind_farms:
        net[zone[w.bus]] += wind_mw[w.id]
    for ld in case.loads:
        net[zone[ld.bus]] -= load_mw[ld.id]

    binding = [
        f"corridor:{c.id}"
        for c in zcase.corridors
        if c.capacity_mw > 0 and abs(flows[c.id]) >= c.capacity_mw - FLOW_TOL_MW
    ]
    return ZonalResult(
        hour=hour,
        net_position_mw=net,
        corridor_flow_mw=flows,
        corridor_loss_mw=corridor_loss,
        link_loss_mw={k: float(v) for k, v in link_loss.items()},
        prices={z: float(sol.duals[rows[z]] / base) for z in zcase.zones},
        welfare=-sol.objective,
        binding=binding,
        gen_mw=gen_mw,
        wind_mw=wind_mw,
        load_mw=load_mw,
        warnings=warnings,
        problem=prob,
        solution=sol,
    )
