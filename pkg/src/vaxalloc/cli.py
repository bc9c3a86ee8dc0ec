"""Command-line front end.

Subcommands: ``calibrate`` (inspect calibrated economies), ``solve`` (one
scenario per row), ``frontier`` (dose share against blue-collar risk),
``sweep`` (full risk matrices), ``summarize`` (threshold shares) and
``audit`` (closed form versus brute-force oracle).  Results are emitted as
plot-ready long-format CSV tables or as JSON with full provenance metadata.

Exit codes: 0 success, 1 usage or input-validation failure, 2 data error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .calibration import (
    DEFAULT_GAMMA,
    DataFormatError,
    builtin_dataset_path,
    calibrate,
    load_countries,
)
from .model import Clamp, ModelInputError, Scenario, solve
from .oracle import OracleConfig, brute_force_optimum
from .sweep import GridSpec, sweep_matrix, threshold_share

DATASET_ENV_VAR = "VAXALLOC_DATASET"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

DEFAULT_V_OVER_L = (0.2, 0.4, 0.6)
DEFAULT_BETA_WHITE = (0.05, 0.25)
DEFAULT_THRESHOLD = 0.66

SOLVE_FIELDS = (
    "country", "beta_w", "beta_b", "v_over_l", "v_blue_star", "v_ratio",
    "clamp", "objective", "surplus_blue", "surplus_white",
)
SWEEP_FIELDS = ("country", "v_over_l", "beta_w", "beta_b", "v_ratio", "clamp")
SUMMARY_FIELDS = ("country", "v_over_l", "threshold", "share_exceeding")
CALIBRATE_FIELDS = (
    "country", "employment", "telework_share", "labor_white", "labor_blue",
    "alpha_white", "alpha_blue", "gamma",
)
AUDIT_FIELDS = (
    "country", "beta_w", "beta_b", "v_over_l", "v_blue_star", "oracle_v_blue",
    "objective", "oracle_objective", "gap",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep argparse from calling sys.exit(2)
        raise UsageError(message)


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")


def build_parser() -> _Parser:
    parser = _Parser(
        prog="vaxalloc",
        description="Unemployment-minimizing vaccine allocation between "
        "on-site and remote-capable workers.",
    )
    common = _Parser(add_help=False)
    common.add_argument(
        "--input",
        metavar="PATH",
        help=f"country CSV (default: ${DATASET_ENV_VAR} or the built-in synthetic dataset)",
    )
    common.add_argument("--gamma", type=float, default=DEFAULT_GAMMA,
                        help="home-office productivity retention (default %(default)s)")
    common.add_argument("--country", metavar="CODE", help="restrict to one country code")
    common.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default %(default)s)")
    common.add_argument("--output", metavar="PATH", default="-",
                        help="output file, '-' for standard output (default)")

    grid = _Parser(add_help=False)
    grid.add_argument("--beta-min", type=float, default=0.05)
    grid.add_argument("--beta-max", type=float, default=0.95)
    grid.add_argument("--beta-step", type=float, default=0.05)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("calibrate", parents=[common],
                       help="emit calibrated economy profiles")

    p = sub.add_parser("solve", parents=[common], help="solve single scenarios")
    p.add_argument("--beta-w", type=float, required=True, help="white-collar infection risk")
    p.add_argument("--beta-b", type=float, required=True, help="blue-collar infection risk")
    p.add_argument("--v-over-l", type=_float_list, default=DEFAULT_V_OVER_L,
                   help="comma-separated vaccine coverage fractions (default 0.2,0.4,0.6)")

    p = sub.add_parser("frontier", parents=[common, grid],
                       help="dose share as a function of blue-collar risk")
    p.add_argument("--beta-w", type=_float_list, default=DEFAULT_BETA_WHITE,
                   help="comma-separated white-collar risks (default 0.05,0.25)")
    p.add_argument("--v-over-l", type=_float_list, default=DEFAULT_V_OVER_L)

    p = sub.add_parser("sweep", parents=[common, grid],
                       help="solve the full (beta_w, beta_b) matrix")
    p.add_argument("--v-over-l", type=_float_list, default=DEFAULT_V_OVER_L)
    p.add_argument("--workers", type=int, default=1,
                   help="process-pool size for cell evaluation (default 1)")
    p.add_argument("--out-dir", metavar="DIR",
                   help="write one file per (country, v_over_l) here instead of --output")

    p = sub.add_parser("summarize", parents=[common, grid],
                       help="share of riskier-blue-collar cells above a dose-share threshold")
    p.add_argument("--v-over-l", type=_float_list, default=DEFAULT_V_OVER_L)
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD,
                   help="dose-share cutoff (default %(default)s)")

    p = sub.add_parser("audit", parents=[common],
                       help="compare the closed form against the brute-force oracle")
    p.add_argument("--beta-w", type=float, required=True)
    p.add_argument("--beta-b", type=float, required=True)
    p.add_argument("--v-over-l", type=_float_list, default=DEFAULT_V_OVER_L)
    p.add_argument("--grid-points", type=int, default=100_001)
    p.add_argument("--no-refine", action="store_true",
                   help="skip the golden-section refinement pass")

    return parser


def _resolve_dataset(args) -> tuple[Path, str]:
    if args.input:
        return Path(args.input), "flag"
    env = os.environ.get(DATASET_ENV_VAR)
    if env:
        return Path(env), "env"
    return builtin_dataset_path(), "builtin"


def _select_records(args):
    path, origin = _resolve_dataset(args)
    try:
        records = load_countries(path)
    except OSError as exc:
        raise DataFormatError(f"cannot read dataset {path}: {exc}") from None
    if args.country is not None:
        records = [r for r in records if r.country_code == args.country]
        if not records:
            raise UsageError(f"country {args.country!r} not in dataset {path}")
    if not records:
        raise DataFormatError(f"dataset {path} contains no countries")
    return records, {"dataset": str(path), "dataset_origin": origin}


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _grid_metadata(grid: GridSpec) -> dict:
    return {"beta_min": grid.beta_min, "beta_max": grid.beta_max, "step": grid.step}


def _count_degenerate(rows) -> int:
    return sum(1 for row in rows if row.get("clamp") == Clamp.DEGENERATE.value)


def _emit(handle, fmt: str, command: str, fieldnames, rows, metadata) -> None:
    if fmt == "csv":
        writer = csv.DictWriter(handle, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _fmt(value) for key, value in row.items()})
    else:
        document = {"command": command, "metadata": metadata, "rows": rows}
        handle.write(json.dumps(document, indent=2))
        handle.write("\n")


def _write(args, command: str, fieldnames, rows, metadata) -> None:
    if args.output == "-":
        _emit(sys.stdout, args.format, command, fieldnames, rows, metadata)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as handle:
            _emit(handle, args.format, command, fieldnames, rows, metadata)


def _cmd_calibrate(args, records, provenance) -> int:
    rows = []
    for record in records:
        profile = calibrate(record, args.gamma)
        rows.append({
            "country": record.country_code,
            "employment": record.employment_total,
            "telework_share": record.telework_share,
            "labor_white": profile.labor_white,
            "labor_blue": profile.labor_blue,
            "alpha_white": profile.alpha_white,
            "alpha_blue": profile.alpha_blue,
            "gamma": profile.gamma,
        })
    metadata = {"gamma": args.gamma, **provenance}
    _write(args, "calibrate", CALIBRATE_FIELDS, rows, metadata)
    return EXIT_OK


def _cmd_solve(args, records, provenance) -> int:
    rows = []
    for record in records:
        profile = calibrate(record, args.gamma)
        for v_over_l in args.v_over_l:
            scenario = Scenario.with_coverage(profile, args.beta_w, args.beta_b, v_over_l)
            result = solve(profile, scenario)
            rows.append({
                "country": record.country_code,
                "beta_w": args.beta_w,
                "beta_b": args.beta_b,
                "v_over_l": v_over_l,
                "v_blue_star": result.v_blue_star,
                "v_ratio": result.v_blue_star / scenario.vaccines,
                "clamp": result.clamp.value,
                "objective": result.objective,
                "surplus_blue": result.surplus_blue,
                "surplus_white": result.surplus_white,
            })
    metadata = {
        "gamma": args.gamma,
        "beta_w": args.beta_w,
        "beta_b": args.beta_b,
        "v_over_l": list(args.v_over_l),
        "degenerate_rows": _count_degenerate(rows),
        **provenance,
    }
    _write(args, "solve", SOLVE_FIELDS, rows, metadata)
    return EXIT_OK


def _cmd_frontier(args, records, provenance) -> int:
    grid = GridSpec(args.beta_min, args.beta_max, args.beta_step)
    rows = []
    for record in records:
        profile = calibrate(record, args.gamma)
        for v_over_l in args.v_over_l:
            vaccines = v_over_l * profile.total_labor
            for beta_w in args.beta_w:
                for beta_b in grid.values():
                    result = solve(profile, Scenario(beta_w, beta_b, vaccines))
                    rows.append({
                        "country": record.country_code,
                        "v_over_l": v_over_l,
                        "beta_w": beta_w,
                        "beta_b": beta_b,
                        "v_ratio": result.v_blue_star / vaccines,
                        "clamp": result.clamp.value,
                    })
    metadata = {
        "gamma": args.gamma,
        "beta_w": list(args.beta_w),
        "v_over_l": list(args.v_over_l),
        "grid": _grid_metadata(grid),
        "degenerate_rows": _count_degenerate(rows),
        **provenance,
    }
    _write(args, "frontier", SWEEP_FIELDS, rows, metadata)
    return EXIT_OK


def _sweep_rows(country: str, grid_result) -> list[dict]:
    rows = []
    for beta_w in grid_result.spec.values():
        for beta_b in grid_result.spec.values():
            cell = grid_result.cells[(beta_w, beta_b)]
            rows.append({
                "country": country,
                "v_over_l": grid_result.v_over_l,
                "beta_w": beta_w,
                "beta_b": beta_b,
                "v_ratio": cell.v_blue_star / grid_result.vaccines,
                "clamp": cell.clamp.value,
            })
    return rows


def _cmd_sweep(args, records, provenance) -> int:
    grid = GridSpec(args.beta_min, args.beta_max, args.beta_step)
    base_metadata = {
        "gamma": args.gamma,
        "v_over_l": list(args.v_over_l),
        "grid": _grid_metadata(grid),
        **provenance,
    }
    if args.out_dir is not None:
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        extension = "csv" if args.format == "csv" else "json"
        for record in records:
            profile = calibrate(record, args.gamma)
            for v_over_l in args.v_over_l:
                result = sweep_matrix(profile, v_over_l, grid, workers=args.workers)
                rows = _sweep_rows(record.country_code, result)
                metadata = {**base_metadata, "v_over_l": v_over_l,
                            "degenerate_rows": _count_degenerate(rows)}
                name = f"sweep_{record.country_code}_{_fmt(v_over_l)}.{extension}"
                with open(out_dir / name, "w", encoding="utf-8", newline="") as handle:
                    _emit(handle, args.format, "sweep", SWEEP_FIELDS, rows, metadata)
        return EXIT_OK

    rows = []
    for record in records:
        profile = calibrate(record, args.gamma)
        for v_over_l in args.v_over_l:
            result = sweep_matrix(profile, v_over_l, grid, workers=args.workers)
            rows.extend(_sweep_rows(record.country_code, result))
    metadata = {**base_metadata, "degenerate_rows": _count_degenerate(rows)}
    _write(args, "sweep", SWEEP_FIELDS, rows, metadata)
    return EXIT_OK


def _cmd_summarize(args, records, provenance) -> int:
    grid = GridSpec(args.beta_min, args.beta_max, args.beta_step)
    rows = []
    for record in records:
        profile = calibrate(record, args.gamma)
        for v_over_l in args.v_over_l:
            summary = threshold_share(sweep_matrix(profile, v_over_l, grid), args.threshold)
            rows.append({
                "country": record.country_code,
                "v_over_l": v_over_l,
                "threshold": summary.threshold,
                "share_exceeding": summary.share_exceeding,
            })
    metadata = {
        "gamma": args.gamma,
        "v_over_l": list(args.v_over_l),
        "threshold": args.threshold,
        "grid": _grid_metadata(grid),
        **provenance,
    }
    _write(args, "summarize", SUMMARY_FIELDS, rows, metadata)
    return EXIT_OK


def _cmd_audit(args, records, provenance) -> int:
    config = OracleConfig(grid_points=args.grid_points, refine=not args.no_refine)
    rows = []
    for record in records:
        profile = calibrate(record, args.gamma)
        for v_over_l in args.v_over_l:
            scenario = Scenario.with_coverage(profile, args.beta_w, args.beta_b, v_over_l)
            result = solve(profile, scenario)
            oracle_v, oracle_objective = brute_force_optimum(profile, scenario, config)
            rows.append({
                "country": record.country_code,
                "beta_w": args.beta_w,
                "beta_b": args.beta_b,
                "v_over_l": v_over_l,
                "v_blue_star": result.v_blue_star,
                "oracle_v_blue": oracle_v,
                "objective": result.objective,
                "oracle_objective": oracle_objective,
                "gap": result.objective - oracle_objective,
            })
    metadata = {
        "gamma": args.gamma,
        "beta_w": args.beta_w,
        "beta_b": args.beta_b,
        "v_over_l": list(args.v_over_l),
        "oracle": {"grid_points": config.grid_points, "refine": config.refine},
        **provenance,
    }
    _write(args, "audit", AUDIT_FIELDS, rows, metadata)
    return EXIT_OK


_HANDLERS = {
    "calibrate": _cmd_calibrate,
    "solve": _cmd_solve,
    "frontier": _cmd_frontier,
    "sweep": _cmd_sweep,
    "summarize": _cmd_summarize,
    "audit": _cmd_audit,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        records, provenance = _select_records(args)
        return _HANDLERS[args.command](args, records, provenance)
    except UsageError as exc:
        print(f"vaxalloc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ModelInputError as exc:
        print(f"vaxalloc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataFormatError as exc:
        print(f"vaxalloc: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"vaxalloc: data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
