"""Hourly load and wind series for one non-leap year (8760 snapshots)."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Mapping

import numpy as np

from .case import tables
from .case.model import LoadSpec, SystemCase

HOURS = 8760
PROFILE_KEYS = ("DK1", "DK2", "SE1", "SE4")
CLASSES = ("RES", "IND", "COM")

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_TWO53 = float(1 << 53)

# first day-of-year of each half-month period, non-leap calendar
_MONTH_DAYS = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)
_PERIOD_START = []
_day = 1
for _len in _MONTH_DAYS:
    _PERIOD_START += [_day, _day + 15 if _len != 28 else _day + 14]
    _day += _len
_PERIOD_START = tuple(_PERIOD_START)
del _day, _len


def period_of_day(day_of_year: int) -> int:
    """Half-month period (1..24) containing ``day_of_year`` (1..365)."""
    if not 1 <= day_of_year <= 365:
        raise ValueError(f"day of year out of range: {day_of_year}")
    period = 0
    for k, start in enumerate(_PERIOD_START):
        if day_of_year >= start:
            period = k + 1
    return period


def yearly_coeff(period: int, cls: str) -> float:
    return tables.YEARLY_PROFILE[period - 1][CLASSES.index(cls)]


def daily_coeff(hour: int, cls: str) -> float:
    return tables.DAILY_PROFILE[hour][CLASSES.index(cls)]


@dataclass(frozen=True)
class ProfileTables:
    yearly: np.ndarray  # (24 periods, 3 classes)
    daily: np.ndarray  # (24 hours, 3 classes)

    @classmethod
    def default(cls) -> "ProfileTables":
        return cls(np.array(tables.YEARLY_PROFILE), np.array(tables.DAILY_PROFILE))


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


class RngStream:
    """splitmix64 generator; the output sequence is fixed by the seed on every platform."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        return _mix(self.state)

    def next_unit(self) -> float:
        """Uniform in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) / _TWO53

    def next_uniform_r(self) -> float:
        return 0.95 + 0.1 * self.next_unit()

    def unit_block(self, n: int) -> np.ndarray:
        """The next ``n`` :meth:`next_unit` draws, vectorised."""
        k = np.arange(1, n + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            z = np.uint64(self.state) + k * np.uint64(_GAMMA)
            z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
            z = z ^ (z >> np.uint64(31))
        self.state = (self.state + n * _GAMMA) & _MASK64
        return (z >> np.uint64(11)).astype(np.float64) / _TWO53

    def uniform_r_block(self, n: int) -> np.ndarray:
        return 0.95 + 0.1 * self.unit_block(n)


def next_uniform_r(stream: RngStream) -> float:
    return stream.next_uniform_r()


def load_dmax(load: LoadSpec, period: int, hour: int, r: float) -> float:
    """Maximum consumption (MW) of ``load`` in the given period and hour of day."""
    res = yearly_coeff(period, "RES") * daily_coeff(hour, "RES")
    com = yearly_coeff(period, "COM") * daily_coeff(hour, "COM")
    ind = yearly_coeff(period, "IND") * daily_coeff(hour, "IND")
    peak = load.peak_mw
    return (
        0.65 * res * r * load.i1 * peak
        + 0.35 * com * r * load.i1 * peak
        + ind * r * load.i2 * peak
    )


@dataclass(frozen=True)
class WindProfiles:
    factors: Mapping[str, np.ndarray]

    def __post_init__(self):
        for key in PROFILE_KEYS:
            arr = self.factors[key]
            if arr.shape != (HOURS,):
                raise ValueError(f"wind profile {key}: expected {HOURS} values, got {arr.shape[0]}")
            if np.any(arr < 0) or np.any(arr > 1):
                raise ValueError(f"wind profile {key}: capacity factor outside [0, 1]")

    def __getitem__(self, key: str) -> np.ndarray:
        return self.factors[key]


@dataclass(frozen=True)
class SnapshotSeries:
    dmax_mw: np.ndarray  # (hours, loads), case load order
    wind_cf: np.ndarray  # (hours, farms), case farm order
    seed: int
    load_ids: tuple
    farm_ids: tuple

    @property
    def hours(self) -> int:
        return self.dmax_mw.shape[0]

    def write_csv(self, directory) -> list:
        """Write ``dmax.csv`` and ``wind_cf.csv``; return the paths."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        out = []
        for name, header, ids, values in (
            ("dmax.csv", ("hour", "load_id", "dmax_mw"), self.load_ids, self.dmax_mw),
            ("wind_cf.csv", ("hour", "farm_id", "cf"), self.farm_ids, self.wind_cf),
        ):
            path = directory / name
            with open(path, "w", newline="", encoding="utf-8") as fh:
                w = csv.writer(fh, lineterminator="\n")
                w.writerow(header)
                for h in range(values.shape[0]):
                    for j, ident in enumerate(ids):
                        w.writerow([h, ident, repr(float(values[h, j]))])
            out.append(path)
        return out


def _envelope(case: SystemCase) -> np.ndarray:
    """Maximum demand with r = 1 for every (hour, load)."""
    yearly = np.array(tables.YEARLY_PROFILE)
    daily = np.array(tables.DAILY_PROFILE)
    periods = np.array([period_of_day(d) - 1 for d in range(1, 366)]).repeat(24)
    hod = np.tile(np.arange(24), 365)
    y, d = yearly[periods], daily[hod]  # (8760, 3)
    res, ind, com = (y[:, k] * d[:, k] for k in range(3))
    i1 = np.array([ld.i1 for ld in case.loads], dtype=float)
    i2 = np.array([ld.i2 for ld in case.loads], dtype=float)
    peak = np.array([ld.peak_mw for ld in case.loads])
    return (
        0.65 * res[:, None] * i1 * peak
        + 0.35 * com[:, None] * i1 * peak
        + ind[:, None] * i2 * peak
    )


def generate_year(case: SystemCase, seed: int, wind: WindProfiles) -> SnapshotSeries:
    """Fill max demand and wind capacity factors for all 8760 hours.

    One ``r`` is drawn per load per hour from a single stream, hour-major and
    in case load order (area ascending, table row order within an area).
    """
    for key in {w.profile_key for w in case.wind_farms}:
        if len(wind[key]) != HOURS:
            raise ValueError(f"wind profile {key} has {len(wind[key])} hours, expected {HOURS}")
    n_loads = len(case.loads)
    r = RngStream(seed).uniform_r_block(HOURS * n_loads).reshape(HOURS, n_loads)
    dmax = _envelope(case) * r
    cf = np.column_stack([np.asarray(wind[w.profile_key], dtype=float) for w in case.wind_farms])
    dmax.setflags(write=False)
    cf.setflags(write=False)
    return SnapshotSeries(
        dmax_mw=dmax,
        wind_cf=cf,
        seed=seed,
        load_ids=tuple(ld.id for ld in case.loads),
        farm_ids=tuple(w.id for w in case.wind_farms),
    )


class WindCsvError(ValueError):
    pass


class MissingColumnError(WindCsvError):
    pass


class RowCountError(WindCsvError):
    pass


class ValueRangeError(WindCsvError):
    pass


class ParseError(WindCsvError):
    pass


def read_wind_csv(path) -> WindProfiles:
    """Parse ``hour,DK1,DK2,SE1,SE4`` with 8760 data rows of factors in [0, 1]."""
    path = Path(path)
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = [h.strip() for h in next(reader, [])]
        missing = [c for c in ("hour",) + PROFILE_KEYS if c not in header]
        if missing:
            raise MissingColumnError(f"{path}: missing column(s) {', '.join(missing)}")
        cols = {key: header.index(key) for key in PROFILE_KEYS}
        values: Dict[str, list] = {key: [] for key in PROFILE_KEYS}
        n_rows = 0
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            n_rows += 1
            for key, col in cols.items():
                try:
                    v = float(row[col])
                except (ValueError, IndexError) as exc:
                    raise ParseError(f"{path}: row {n_rows} (line {lineno}) column {key}: cannot parse") from exc
                if not 0.0 <= v <= 1.0:
                    raise ValueRangeError(
                        f"{path}: row {n_rows} (line {lineno}) column {key}: value {v} outside [0, 1]"
                    )
                values[key].append(v)
    if n_rows != HOURS:
        raise RowCountError(f"{path}: expected {HOURS} data rows, found {n_rows}")
    return WindProfiles({key: np.array(v) for key, v in values.items()})


def write_wind_csv(profiles: WindProfiles, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("hour",) + PROFILE_KEYS)
        for h in range(HOURS):
            w.writerow([h] + [repr(float(profiles[k][h])) for k in PROFILE_KEYS])


def synth_wind(seed: int) -> WindProfiles:
    """Synthetic stand-in profiles: annual and daily sinusoids plus bounded noise."""
    h = np.arange(HOURS, dtype=float)
    out = {}
    for zone, key in enumerate(PROFILE_KEYS):
        phase = zone * math.pi / 2
        u = RngStream(seed ^ (zone + 1)).unit_block(HOURS)
        cf = (
            0.45
            + 0.25 * np.sin(2 * math.pi * h / HOURS + phase)
            + 0.15 * np.sin(2 * math.pi * h / 24 + phase)
            + 0.15 * (2 * u - 1)
        )
        out[key] = np.clip(cf, 0.05, 0.95)
    return WindProfiles(out)
