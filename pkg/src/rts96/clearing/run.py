"""Clear a range of hours with either market model."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Iterable, Iterator

from ..case.model import SystemCase
from ..timeseries import SnapshotSeries
from .nodal import ClearingOptions, clear_nodal
from .zonal import clear_zonal, reduce_zonal

MODELS = ("nodal", "zonal")


def _clear_one(case, series, model, options, hour):
    if model == "nodal":
        res = clear_nodal(case, hour, series, options)
    else:
        res = clear_zonal(reduce_zonal(case), case, hour, series, options)
    # the LP objects are large; keep results light when shipped between processes
    res.problem = None
    res.solution = None
    return res


def clear_hours(
    case: SystemCase,
    series: SnapshotSeries,
    hours: Iterable[int],
    model: str = "nodal",
    options: ClearingOptions = ClearingOptions(),
    workers: int = 1,
) -> Iterator:
    """Yield per-hour results in hour order, whatever order the workers finish in."""
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    job = partial(_clear_one, case, series, model, options)
    hours = list(hours)
    if workers <= 1:
        yield from map(job, hours)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(job, hours)
