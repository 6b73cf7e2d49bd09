"""Result files for a clearing run, and the report built from them.

Layout of a results directory::

    dispatch.csv   hour,entity_id,kind,mw           (kind: gen | wind | load)
    prices.csv     hour,bus_or_zone,price_usd_per_mwh
    flows.csv      hour,branch_or_corridor,mw
    losses.csv     hour,link,mw
    summary.json   run settings, per-hour objective/loss/binding, totals
"""

from __future__ import annotations

import csv
import json
import math
import os
import shutil
import tempfile
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List

RESULT_FILES = ("dispatch.csv", "prices.csv", "flows.csv", "losses.csv", "summary.json")
HEADERS = {
    "dispatch.csv": ("hour", "entity_id", "kind", "mw"),
    "prices.csv": ("hour", "bus_or_zone", "price_usd_per_mwh"),
    "flows.csv": ("hour", "branch_or_corridor", "mw"),
    "losses.csv": ("hour", "link", "mw"),
}


class ResultsError(RuntimeError):
    pass


def _num(v: float) -> str:
    return repr(float(v))


def _rows(result):
    """Yield (file, row) pairs for one hour of a nodal or zonal result."""
    h = result.hour
    for kind, values in (("gen", result.gen_mw), ("wind", result.wind_mw), ("load", result.load_mw)):
        for ident, mw in values.items():
            yield "dispatch.csv", (h, ident, kind, _num(mw))
    for key, price in result.prices.items():
        label = key if hasattr(result, "branch_flow_mw") else f"Z{key}"
        yield "prices.csv", (h, label, _num(price))
    if hasattr(result, "branch_flow_mw"):
        flows = dict(result.branch_flow_mw)
        flows.update(result.link_flow_mw)
    else:
        flows = result.corridor_flow_mw
    for ident, mw in flows.items():
        yield "flows.csv", (h, ident, _num(mw))
    for ident, mw in result.link_loss_mw.items():
        yield "losses.csv", (h, ident, _num(mw))


def write_results(results: Iterable, out_dir, settings: Dict) -> List[Path]:
    """Write all result files; nothing appears under ``out_dir`` unless every file succeeds."""
    out = Path(out_dir)
    out.parent.mkdir(parents=True, exist_ok=True)
    tmp = Path(tempfile.mkdtemp(prefix=f".{out.name}.tmp-", dir=out.parent))
    try:
        handles = {}
        writers = {}
        for name, header in HEADERS.items():
            handles[name] = open(tmp / name, "w", newline="", encoding="utf-8")
            writers[name] = csv.writer(handles[name], lineterminator="\n")
            writers[name].writerow(header)
        per_hour = []
        try:
            for res in results:
                for name, row in _rows(res):
                    writers[name].writerow(row)
                per_hour.append(
                    {
                        "hour": res.hour,
                        "objective_usd_per_h": res.welfare,
                        "loss_mw": res.total_loss_mw,
                        "binding": list(res.binding),
                        "n_binding": len(res.binding),
                        "warnings": list(res.warnings),
                    }
                )
        finally:
            for fh in handles.values():
                fh.close()
        summary = {
            "settings": settings,
            "hours": per_hour,
            "totals": {
                "n_hours": len(per_hour),
                "objective_usd": math.fsum(h["objective_usd_per_h"] for h in per_hour),
                "loss_mwh": math.fsum(h["loss_mw"] for h in per_hour),
                "binding_hours": sum(1 for h in per_hour if h["n_binding"]),
            },
        }
        (tmp / "summary.json").write_text(json.dumps(summary, indent=1) + "\n", encoding="utf-8")

        if out.exists():
            for name in RESULT_FILES:
                os.replace(tmp / name, out / name)
            shutil.rmtree(tmp)
        else:
            os.replace(tmp, out)
    except BaseException:
        shutil.rmtree(tmp, ignore_errors=True)
        raise
    return [out / name for name in RESULT_FILES]


@dataclass
class ZoneStats:
    zone: int
    mean: float
    min: float
    max: float
    n: int


@dataclass
class Report:
    zones: List[ZoneStats]
    total_loss_mwh: float
    congestion_hours: int
    n_hours: int
    summary_loss_mwh: float

    def text(self) -> str:
        lines = [f"hours: {self.n_hours}"]
        lines.append("zone  mean_price  min_price  max_price  ($/MWh)")
        for z in self.zones:
            lines.append(f"Z{z.zone}    {z.mean:10.4f} {z.min:10.4f} {z.max:10.4f}")
        lines.append(f"total HVDC losses: {self.total_loss_mwh:.6f} MWh")
        lines.append(f"hours with a binding branch/corridor: {self.congestion_hours}")
        return "\n".join(lines)


def _read_csv(path: Path, header) -> List[dict]:
    if not path.exists():
        raise ResultsError(f"missing results file: {path}")
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != tuple(header):
            raise ResultsError(f"corrupt results file {path}: header {reader.fieldnames}")
        try:
            return list(reader)
        except csv.Error as exc:
            raise ResultsError(f"corrupt results file {path}: {exc}") from exc


def _zone(label: str) -> int:
    return int(label[1:]) if label.startswith("Z") else int(label) // 100


def build_report(results_dir) -> Report:
    d = Path(results_dir)
    prices = _read_csv(d / "prices.csv", HEADERS["prices.csv"])
    loss_rows = _read_csv(d / "losses.csv", HEADERS["losses.csv"])
    summary_path = d / "summary.json"
    if not summary_path.exists():
        raise ResultsError(f"missing results file: {summary_path}")
    try:
        summary = json.loads(summary_path.read_text(encoding="utf-8"))
        hours = summary["hours"]
        summary_loss = float(summary["totals"]["loss_mwh"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ResultsError(f"corrupt results file {summary_path}: {exc}") from exc

    by_zone: Dict[int, List[float]] = defaultdict(list)
    try:
        for row in prices:
            by_zone[_zone(row["bus_or_zone"])].append(float(row["price_usd_per_mwh"]))
        total_loss = math.fsum(float(row["mw"]) for row in loss_rows)
    except ValueError as exc:
        raise ResultsError(f"corrupt results file in {d}: {exc}") from exc
    zones = [
        ZoneStats(z, math.fsum(v) / len(v), min(v), max(v), len(v)) for z, v in sorted(by_zone.items())
    ]
    return Report(
        zones=zones,
        total_loss_mwh=total_loss,
        congestion_hours=sum(1 for h in hours if h.get("n_binding", 0) > 0),
        n_hours=len(hours),
        summary_loss_mwh=summary_loss,
    )


def write_report(report: Report, results_dir) -> List[Path]:
    d = Path(results_dir)
    zones_path = d / "report_zones.csv"
    with open(zones_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("zone", "mean_price_usd_per_mwh", "min_price_usd_per_mwh", "max_price_usd_per_mwh", "n"))
        for z in report.zones:
            w.writerow((f"Z{z.zone}", _num(z.mean), _num(z.min), _num(z.max), z.n))
    totals_path = d / "report_totals.csv"
    with open(totals_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("metric", "value"))
        w.writerow(("hours", report.n_hours))
        w.writerow(("total_hvdc_loss_mwh", _num(report.total_loss_mwh)))
        w.writerow(("congestion_hours", report.congestion_hours))
    return [zones_path, totals_path]
