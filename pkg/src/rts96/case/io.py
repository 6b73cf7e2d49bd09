"""Case export/import in JSON or CSV.

JSON layout (``case.json``)::

    {"schema": "rts96-case", "schema_version": 1, "base_mva": 100.0,
     "utility_factors": [...], "cost_factors": [...],
     "buses": [{"id": 101, "area": 1, ...}, ...], "loads": [...], ...}

CSV layout: one file per entity kind (``buses.csv``, ``loads.csv``,
``generators.csv``, ``wind_farms.csv``, ``ac_branches.csv``, ``hvdc_links.csv``)
whose header row is the record's field names in declaration order, plus
``meta.csv`` (``key,value``) carrying the schema version, base and factors.
Floats are written with ``repr`` so a round trip is exact.
"""

from __future__ import annotations

import csv
import json
from dataclasses import asdict, fields
from pathlib import Path
from typing import Dict, List

from .model import AcBranch, Bus, GenSpec, HvdcLink, LoadSpec, SystemCase, WindFarm

SCHEMA = "rts96-case"
SCHEMA_VERSION = 1

ENTITY_TYPES = {
    "buses": Bus,
    "loads": LoadSpec,
    "generators": GenSpec,
    "wind_farms": WindFarm,
    "ac_branches": AcBranch,
    "hvdc_links": HvdcLink,
}
_CASTS = {"int": int, "float": float, "str": str}


class SchemaError(ValueError):
    """Raised when an imported file does not follow the case schema."""


def csv_header(kind: str) -> List[str]:
    return [f.name for f in fields(ENTITY_TYPES[kind])]


def case_to_dict(case: SystemCase) -> Dict:
    out = {
        "schema": SCHEMA,
        "schema_version": SCHEMA_VERSION,
        "base_mva": case.base_mva,
        "utility_factors": list(case.utility_factors),
        "cost_factors": list(case.cost_factors),
    }
    for kind in ENTITY_TYPES:
        out[kind] = [asdict(item) for item in getattr(case, kind)]
    return out


def case_from_dict(data: Dict) -> SystemCase:
    if data.get("schema") != SCHEMA or data.get("schema_version") != SCHEMA_VERSION:
        raise SchemaError(
            f"unsupported case schema {data.get('schema')!r} version {data.get('schema_version')!r}"
        )
    entities = {}
    for kind, cls in ENTITY_TYPES.items():
        if kind not in data:
            raise SchemaError(f"missing key {kind!r}")
        entities[kind] = tuple(_record(cls, row) for row in data[kind])
    return SystemCase(
        base_mva=float(data["base_mva"]),
        utility_factors=tuple(float(v) for v in data["utility_factors"]),
        cost_factors=tuple(float(v) for v in data["cost_factors"]),
        **entities,
    )


def _record(cls, row):
    names = [f.name for f in fields(cls)]
    if set(row) != set(names):
        raise SchemaError(f"{cls.__name__} fields {sorted(row)} do not match {names}")
    return cls(**{f.name: _CASTS[f.type](row[f.name]) for f in fields(cls)})


def export_case(case: SystemCase, fmt: str, destination) -> List[Path]:
    """Write the case under ``destination`` (a directory); return the files written."""
    dest = Path(destination)
    dest.mkdir(parents=True, exist_ok=True)
    if fmt == "json":
        path = dest / "case.json"
        path.write_text(json.dumps(case_to_dict(case), indent=1) + "\n", encoding="utf-8")
        return [path]
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")

    written = []
    meta = dest / "meta.csv"
    with open(meta, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["key", "value"])
        w.writerow(["schema", SCHEMA])
        w.writerow(["schema_version", SCHEMA_VERSION])
        w.writerow(["base_mva", repr(case.base_mva)])
        w.writerow(["utility_factors", " ".join(repr(v) for v in case.utility_factors)])
        w.writerow(["cost_factors", " ".join(repr(v) for v in case.cost_factors)])
    written.append(meta)
    for kind in ENTITY_TYPES:
        path = dest / f"{kind}.csv"
        header = csv_header(kind)
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            for item in getattr(case, kind):
                w.writerow([_fmt(getattr(item, name)) for name in header])
        written.append(path)
    return written


def _fmt(value) -> str:
    return repr(value) if isinstance(value, float) else str(value)


def import_case(source) -> SystemCase:
    """Read a case written by :func:`export_case` (a ``case.json`` file or a CSV directory)."""
    src = Path(source)
    if src.is_dir() and (src / "case.json").exists() and not (src / "meta.csv").exists():
        src = src / "case.json"
    if src.is_file():
        try:
            data = json.loads(src.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{src}: not valid JSON ({exc})") from exc
        return case_from_dict(data)

    with open(src / "meta.csv", newline="", encoding="utf-8") as fh:
        meta = {row["key"]: row["value"] for row in csv.DictReader(fh)}
    data = {
        "schema": meta.get("schema"),
        "schema_version": int(meta.get("schema_version", -1)),
        "base_mva": meta.get("base_mva"),
        "utility_factors": meta.get("utility_factors", "").split(),
        "cost_factors": meta.get("cost_factors", "").split(),
    }
    for kind in ENTITY_TYPES:
        with open(src / f"{kind}.csv", newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames != csv_header(kind):
                raise SchemaError(f"{kind}.csv header {reader.fieldnames} != {csv_header(kind)}")
            data[kind] = list(reader)
    return case_from_dict(data)
