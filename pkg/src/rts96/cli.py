"""Command-line entry point.

Exit codes: 0 success, 1 validation or run failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import results as results_mod
from .case import build_system, export_case, validate
from .clearing import ClearingError, ClearingOptions
from .clearing.run import MODELS, clear_hours
from .timeseries import HOURS, WindCsvError, generate_year, read_wind_csv, synth_wind

log = logging.getLogger("rts96")


@dataclass(frozen=True)
class RunConfig:
    seed: int
    wind_source: str  # "synthetic" or a CSV path
    hours: range
    model: str
    losses: bool
    segments: int
    output_dir: Path


def parse_hours(text: str) -> range:
    try:
        start, end = (int(part) for part in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if start > end:
        raise argparse.ArgumentTypeError(f"hour range {text}: start {start} is after end {end}")
    if start < 0 or end >= HOURS:
        raise argparse.ArgumentTypeError(f"hour range {text} outside 0..{HOURS - 1}")
    return range(start, end + 1)


def parse_wind(text: str) -> str:
    if text == "synth":
        return "synthetic"
    if text.startswith("csv:") and len(text) > 4:
        return text[4:]
    raise argparse.ArgumentTypeError(f"--wind expects csv:PATH or synth, got {text!r}")


def parse_onoff(text: str) -> bool:
    if text not in ("on", "off"):
        raise argparse.ArgumentTypeError(f"expected on or off, got {text!r}")
    return text == "on"


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _add_seed_wind(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=None, help="RNG seed (falls back to $RTS96_SEED)")
    p.add_argument("--wind", type=parse_wind, default="synth", help="csv:PATH or synth")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rts96", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    case = sub.add_parser("case", help="build, validate or export the 96-bus case")
    case_sub = case.add_subparsers(dest="case_command", required=True)
    case_sub.add_parser("validate", help="check the case against the source table totals")
    exp = case_sub.add_parser("export", help="write the case as JSON or CSV")
    exp.add_argument("--format", choices=("json", "csv"), required=True)
    exp.add_argument("--out", type=Path, required=True)

    series = sub.add_parser("series", help="snapshot series")
    series_sub = series.add_subparsers(dest="series_command", required=True)
    gen = series_sub.add_parser("gen", help="generate the 8760-hour load and wind series")
    _add_seed_wind(gen)
    gen.add_argument("--out", type=Path, required=True)

    clear = sub.add_parser("clear", help="clear the market over a range of hours")
    clear.add_argument("--model", choices=MODELS, default="nodal")
    clear.add_argument("--hours", type=parse_hours, required=True, help="inclusive range A..B")
    clear.add_argument("--losses", type=parse_onoff, default=True, help="on or off")
    clear.add_argument("--segments", type=positive_int, default=10)
    _add_seed_wind(clear)
    clear.add_argument("--out", type=Path, required=True)

    report = sub.add_parser("report", help="summarise a results directory")
    report.add_argument("--in", dest="results_dir", type=Path, required=True)
    return parser


def _seed(parser, value: Optional[int]) -> int:
    if value is not None:
        return value
    env = os.environ.get("RTS96_SEED")
    if env is None:
        parser.error("--seed is required (or set RTS96_SEED)")
    try:
        return int(env)
    except ValueError:
        parser.error(f"RTS96_SEED is not an integer: {env!r}")


def _wind(source: str, seed: int):
    return synth_wind(seed) if source == "synthetic" else read_wind_csv(source)


def _cmd_case(args) -> int:
    case = build_system()
    if args.case_command == "validate":
        report = validate(case)
        print(report.format())
        return 0 if report.ok else 1
    for path in export_case(case, args.format, args.out):
        print(path)
    return 0


def _cmd_series(args, parser) -> int:
    seed = _seed(parser, args.seed)
    series = generate_year(build_system(), seed, _wind(args.wind, seed))
    for path in series.write_csv(args.out):
        print(path)
    return 0


def _cmd_clear(args, parser) -> int:
    cfg = RunConfig(
        seed=_seed(parser, args.seed),
        wind_source=args.wind,
        hours=args.hours,
        model=args.model,
        losses=args.losses,
        segments=args.segments,
        output_dir=args.out,
    )
    case = build_system()
    series = generate_year(case, cfg.seed, _wind(cfg.wind_source, cfg.seed))
    options = ClearingOptions(losses_enabled=cfg.losses, pwl_segments=cfg.segments)
    settings = {
        "model": cfg.model,
        "losses": cfg.losses,
        "segments": cfg.segments,
        "seed": cfg.seed,
        "wind": cfg.wind_source,
        "hours": [cfg.hours.start, cfg.hours.stop - 1],
    }
    log.info("clearing %d hour(s) with the %s model", len(cfg.hours), cfg.model)
    results = clear_hours(case, series, cfg.hours, cfg.model, options)
    for path in results_mod.write_results(results, cfg.output_dir, settings):
        print(path)
    return 0


def _cmd_report(args) -> int:
    report = results_mod.build_report(args.results_dir)
    print(report.text())
    for path in results_mod.write_report(report, args.results_dir):
        print(path)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        if args.command == "case":
            return _cmd_case(args)
        if args.command == "series":
            return _cmd_series(args, parser)
        if args.command == "clear":
            return _cmd_clear(args, parser)
        return _cmd_report(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (WindCsvError, ClearingError, results_mod.ResultsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


run = main

if __name__ == "__main__":
    sys.exit(main())
