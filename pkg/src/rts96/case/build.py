"""Assemble the 4-area system from the embedded tables."""

from __future__ import annotations

from functools import lru_cache

from . import tables
from .model import AcBranch, Bus, GenSpec, HvdcLink, LoadSpec, SystemCase, WindFarm

_KIND = {1: "load", 2: "generator", 3: "slack"}
N_AREAS = 4


def _buses():
    buses = [Bus(row[0], 1, _KIND[row[1]], *row[2:]) for row in tables.AREA1_BUSES]
    for area in range(2, N_AREAS + 1):
        offset = 100 * (area - 2)
        buses.extend(
            Bus(row[0] + offset, area, _KIND[row[1]], *row[2:]) for row in tables.AREA2_BUSES
        )
    return buses


def _loads():
    loads = []
    for area in range(1, N_AREAS + 1):
        factor = tables.UTILITY_FACTORS[area - 1]
        for lid, local, peak, utility, i1, i2 in tables.LOADS:
            loads.append(LoadSpec(f"{area}-{lid}", 100 * area + local, peak, utility * factor, i1, i2))
    return loads


def _generators():
    gens = []
    for area in range(1, N_AREAS + 1):
        factor = tables.COST_FACTORS[area - 1]
        for gid, local, pmax, qmin, qmax, cost in tables.GENERATORS:
            gens.append(GenSpec(f"{area}-{gid}", 100 * area + local, pmax, qmin, qmax, cost * factor))
    return gens


def _wind_farms():
    return [
        WindFarm(f"W{k:02d}", bus, pmax, key)
        for k, (_, bus, pmax, key) in enumerate(tables.WIND_FARMS, start=1)
    ]


def _branches():
    branches = []
    for area in range(1, N_AREAS + 1):
        base = 100 * area
        for bid, f, t, r, x, b, rating, ratio in tables.LINES:
            branches.append(AcBranch(f"{area}-{bid}", base + f, base + t, r, x, b, rating, ratio))
    for bid, f, t, r, x, b, rating in tables.AC_TIES:
        branches.append(AcBranch(bid, f, t, r, x, b, rating, 0.0))
    return branches


def _links():
    return [HvdcLink(*row) for row in tables.HVDC_LINKS]


@lru_cache(maxsize=1)
def build_system() -> SystemCase:
    """Build the 96-bus, 4-area case with tie-lines and area scaling applied."""
    case = SystemCase(
        buses=tuple(_buses()),
        loads=tuple(_loads()),
        generators=tuple(_generators()),
        wind_farms=tuple(_wind_farms()),
        ac_branches=tuple(_branches()),
        hvdc_links=tuple(_links()),
        base_mva=tables.BASE_MVA,
        utility_factors=tables.UTILITY_FACTORS,
        cost_factors=tables.COST_FACTORS,
    )
    _check_invariants(case)
    return case


def _check_invariants(case: SystemCase) -> None:
    ids = case.bus_ids
    assert len(ids) == 96 and len(set(ids)) == 96
    assert all(b.area == b.id // 100 for b in case.buses)
    assert [b.id for b in case.buses if b.kind == "slack"] == [tables.SLACK_BUS]
    assert len(case.loads) == 68 and all(ld.i1 + ld.i2 == 1 and ld.peak_mw > 0 for ld in case.loads)
    assert len(case.generators) == 132 and all(g.pmax_mw >= 0 for g in case.generators)
    assert len(case.wind_farms) == 16
    assert len(case.ac_branches) == 156
    assert all(br.x_pu > 0 and br.rating_mva > 0 for br in case.ac_branches)
    assert len(case.hvdc_links) == 3
    for link in case.hvdc_links:
        assert min(link.r_pu, link.a_inv, link.a_rec, link.b_coef, link.c_coef) >= 0
        assert (link.from_bus // 100 == 1) != (link.to_bus // 100 == 1)
    known = set(ids)
    for item in case.loads + case.generators + case.wind_farms:
        assert item.bus in known, item
    for br in case.ac_branches:
        assert br.from_bus in known and br.to_bus in known, br
