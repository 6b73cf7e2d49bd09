"""Immutable records describing the 96-bus system."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class Bus:
    id: int
    area: int
    kind: str  # "load" | "generator" | "slack"
    gl: float
    bl: float
    base_kv: float
    vmax: float
    vmin: float


@dataclass(frozen=True)
class LoadSpec:
    id: str
    bus: int
    peak_mw: float
    utility_usd_per_mwh: float
    i1: int
    i2: int


@dataclass(frozen=True)
class GenSpec:
    id: str
    bus: int
    pmax_mw: float
    qmin_mvar: float
    qmax_mvar: float
    cost_usd_per_mwh: float


@dataclass(frozen=True)
class WindFarm:
    id: str
    bus: int
    pmax_mw: float
    profile_key: str


@dataclass(frozen=True)
class AcBranch:
    id: str
    from_bus: int
    to_bus: int
    r_pu: float
    x_pu: float
    b_pu: float
    rating_mva: float
    tap_ratio: float

    @property
    def is_transformer(self) -> bool:
        return self.tap_ratio > 0


@dataclass(frozen=True)
class HvdcLink:
    id: str
    from_bus: int
    to_bus: int
    r_pu: float
    a_inv: float
    a_rec: float
    b_coef: float
    c_coef: float
    rating_mw: float


@dataclass(frozen=True)
class SystemCase:
    """The whole network. Utilities and costs are stored after area scaling."""

    buses: Tuple[Bus, ...]
    loads: Tuple[LoadSpec, ...]
    generators: Tuple[GenSpec, ...]
    wind_farms: Tuple[WindFarm, ...]
    ac_branches: Tuple[AcBranch, ...]
    hvdc_links: Tuple[HvdcLink, ...]
    base_mva: float = 100.0
    utility_factors: Tuple[float, ...] = (1.8, 0.95, 1.0, 1.1)
    cost_factors: Tuple[float, ...] = (0.97, 1.03, 1.0, 0.99)

    @property
    def bus_ids(self) -> Tuple[int, ...]:
        return tuple(b.id for b in self.buses)

    @property
    def slack_bus(self) -> int:
        (slack,) = [b.id for b in self.buses if b.kind == "slack"]
        return slack

    def bus_index(self) -> dict:
        """Map bus id to its position in :attr:`buses`."""
        return {b.id: i for i, b in enumerate(self.buses)}

    def load(self, load_id: str) -> LoadSpec:
        return _find(self.loads, load_id)

    def generator(self, gen_id: str) -> GenSpec:
        return _find(self.generators, gen_id)

    def branch(self, branch_id: str) -> AcBranch:
        return _find(self.ac_branches, branch_id)

    def link(self, link_id: str) -> HvdcLink:
        return _find(self.hvdc_links, link_id)

    def replace_links(self, links) -> "SystemCase":
        from dataclasses import replace

        return replace(self, hvdc_links=tuple(links))


def area_of(bus_id: int) -> int:
    return bus_id // 100


def _find(items, item_id):
    for item in items:
        if item.id == item_id:
            return item
    raise KeyError(item_id)
