"""Transcription checks against the aggregate figures of the source tables."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List

from .model import SystemCase

EXPECTED_COUNTS = {
    "buses": 96,
    "loads": 68,
    "generators": 132,
    "wind_farms": 16,
    "ac_branches": 156,
    "hvdc_links": 3,
}
EXPECTED_PEAK_PER_AREA = 3135.0
EXPECTED_PMAX_PER_AREA = 3405.0
EXPECTED_WIND_PER_AREA = (340.5, 34.06, 272.4, 102.6)


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    actual: object
    passed: bool


@dataclass
class ValidationReport:
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, expected, actual, passed=None) -> None:
        if passed is None:
            passed = expected == actual
        self.checks.append(Check(name, expected, actual, bool(passed)))

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def format(self) -> str:
        lines = []
        for c in self.checks:
            tag = "PASS" if c.passed else "FAIL"
            lines.append(f"{tag}  {c.name}: expected {c.expected}, got {c.actual}")
        lines.append("OK" if self.ok else f"{len(self.failures())} check(s) failed")
        return "\n".join(lines)


def _area_total(values) -> float:
    # Table values carry at most 2 decimals; compare at that resolution.
    return round(math.fsum(values), 6)


def validate(case: SystemCase) -> ValidationReport:
    from ..network import find_islands

    report = ValidationReport()
    for kind, n in EXPECTED_COUNTS.items():
        report.add(f"count {kind}", n, len(getattr(case, kind)))

    for area in range(1, 5):
        peak = _area_total(ld.peak_mw for ld in case.loads if ld.bus // 100 == area)
        report.add(f"area {area} peak load MW", EXPECTED_PEAK_PER_AREA, peak)
        pmax = _area_total(g.pmax_mw for g in case.generators if g.bus // 100 == area)
        report.add(f"area {area} generation capacity MW", EXPECTED_PMAX_PER_AREA, pmax)
        wind = _area_total(w.pmax_mw for w in case.wind_farms if w.bus // 100 == area)
        report.add(f"area {area} wind capacity MW", EXPECTED_WIND_PER_AREA[area - 1], wind)

    report.add(
        "loads with exactly one profile selector",
        len(case.loads),
        sum(1 for ld in case.loads if ld.i1 + ld.i2 == 1 and {ld.i1, ld.i2} == {0, 1}),
    )
    area1_ties = [
        br.id for br in case.ac_branches if (br.from_bus // 100 == 1) != (br.to_bus // 100 == 1)
    ]
    report.add("AC ties touching area 1", [], area1_ties)
    report.add(
        "HVDC links with one terminal in area 1",
        len(case.hvdc_links),
        sum(1 for lk in case.hvdc_links if (lk.from_bus // 100 == 1) != (lk.to_bus // 100 == 1)),
    )

    part = find_islands(case)
    report.add("synchronous islands", 2, part.n_islands)
    islands = sorted((part.members(k) for k in range(part.n_islands)), key=lambda m: m[0])
    expected = [
        [b for b in case.bus_ids if b // 100 == 1],
        [b for b in case.bus_ids if b // 100 != 1],
    ]
    report.add("island membership (area 1 | areas 2-4)", True, islands == sorted(expected))
    return report
