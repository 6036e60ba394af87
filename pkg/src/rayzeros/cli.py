"""Command-line surface: classify, predict, zeros, thresholds, sweep, verify.

Every command validates (m, k, c) first, then emits machine-readable rows as
JSON (default) or CSV.  JSON output is a single object

    {"params": {...}, "results": [...], "meta": {"version": ..., "tolerances": {...}}}

and CSV carries the same result rows field-for-field after a header line.
Floats are printed with shortest round-trip formatting so outputs are stable
and diff-friendly.

Exit codes: 0 success, 1 invalid parameters, 2 verification mismatch,
3 numerical failure.  Tolerances resolve as flags > RAYZEROS_* environment
variables > defaults.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass

from . import __version__
from .family import ParameterError, Sign, validate
from .oracle import ResolutionTooCoarse, compare, find_zeros_grid
from .predict import predict_at, predict_census, predict_table
from .rays import analyze_ray, count_at, thresholds
from .roots import BracketFailure, Tolerances, all_zeros

__all__ = ["RunConfig", "run", "main"]

ENV_PREFIX = "RAYZEROS_"

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISMATCH = 2
EXIT_NUMERICAL = 3


@dataclass(slots=True)
class RunConfig:
    command: str
    m: int
    k: int
    c: float = 1.0
    c_min: float | None = None
    c_max: float | None = None
    steps: int | None = None
    spacing: str = "linear"
    format: str = "json"
    output: str | None = None
    resolution: int = 256
    tolerances: Tolerances = Tolerances()


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ";".join(_fmt(v) for v in value)
    if value is None:
        return ""
    return str(value)


def _emit(config: RunConfig, rows: list[dict], meta_extra: dict | None = None) -> str:
    if config.format == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(rows[0].keys())
            for row in rows:
                writer.writerow([_fmt(v) for v in row.values()])
        return buf.getvalue()
    meta = {
        "version": __version__,
        "tolerances": {
            "radius": config.tolerances.radius_rtol,
            "residual": config.tolerances.residual_rtol,
        },
    }
    if meta_extra:
        meta.update(meta_extra)
    doc = {
        "params": {"m": config.m, "k": config.k, "c": config.c},
        "results": rows,
        "meta": meta,
    }
    return json.dumps(doc, indent=2) + "\n"


def _cmd_classify(config: RunConfig, params) -> list[dict]:
    rows = []
    for j in range(2 * params.m):
        a = analyze_ray(params, j)
        rows.append(
            {
                "j": j,
                "angle": a.ray.angle,
                "parity": "even" if a.ray.parity == 0 else "odd",
                "alpha_sign": Sign(a.ray.alpha_sign).name.lower(),
                "alpha": a.alpha,
                "case": a.case.value,
                "count": count_at(a, params.c),
                "r0": a.r0,
                "c0": a.c0,
            }
        )
    return rows


def _cmd_predict(config: RunConfig, params) -> list[dict]:
    rows = []
    for pred in (predict_table(params), predict_census(params)):
        rows.append(
            {
                "source": pred.source,
                "min_count": pred.min_count,
                "max_count": pred.max_count,
                "direction": pred.direction,
            }
        )
    return rows


def _cmd_zeros(config: RunConfig, params) -> list[dict]:
    return [
        {
            "j": rec.j,
            "r": rec.r,
            "re": rec.z.real,
            "im": rec.z.imag,
            "residual": rec.residual,
            "degenerate": rec.degenerate,
        }
        for rec in all_zeros(params, config.tolerances)
    ]


def _cmd_thresholds(config: RunConfig, params) -> list[dict]:
    return [
        {"c0": th.c0, "rays": list(th.rays), "alpha": th.alpha}
        for th in thresholds(params)
    ]


def _sweep_grid(config: RunConfig) -> list[float]:
    lo, hi, n = config.c_min, config.c_max, config.steps
    if config.spacing == "log":
        return [math.exp(x) for x in _linspace(math.log(lo), math.log(hi), n)]
    return _linspace(lo, hi, n)


def _linspace(lo: float, hi: float, n: int) -> list[float]:
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _cmd_sweep(config: RunConfig, params) -> tuple[list[dict], dict]:
    ths = thresholds(params)
    rows = []
    prev = None
    for c in _sweep_grid(config):
        crossed = (
            []
            if prev is None
            else [th.c0 for th in ths if prev < th.c0 <= c]
        )
        rows.append({"c": c, "count": predict_at(params, c), "crossed": crossed})
        prev = c
    overlay = {"thresholds": [{"c0": th.c0, "rays": list(th.rays)} for th in ths]}
    return rows, overlay


def _cmd_verify(config: RunConfig, params) -> tuple[list[dict], bool]:
    rows = []
    ok = True

    table = predict_table(params)
    cen = predict_census(params)
    agree = table == cen
    ok &= agree
    rows.append(
        {
            "check": "table_census_equivalence",
            "passed": agree,
            "detail": f"table=({table.min_count},{table.max_count}) census=({cen.min_count},{cen.max_count})",
        }
    )

    records = all_zeros(params, config.tolerances)
    predicted = predict_at(params, params.c)
    agree = len(records) == predicted
    ok &= agree
    rows.append(
        {
            "check": "ray_count_vs_prediction",
            "passed": agree,
            "detail": f"zeros={len(records)} predicted={predicted}",
        }
    )

    oracle_res = find_zeros_grid(params, config.resolution)
    report = compare(params, oracle_res, records)
    agree = report.clean and len(oracle_res.zeros) == len(records) and report.max_distance < 1e-6
    ok &= agree
    rows.append(
        {
            "check": "oracle_agreement",
            "passed": agree,
            "detail": (
                f"oracle={len(oracle_res.zeros)} rays={len(records)} "
                f"matched={report.matched} max_distance={report.max_distance:.3g}"
            ),
        }
    )
    return rows, ok


def run(config: RunConfig) -> int:
    """Execute one command; returns the process exit code."""
    try:
        params = validate(config.m, config.k, config.c)
    except ParameterError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID

    if config.command == "sweep":
        if config.c_min is None or config.c_max is None or config.steps is None:
            print("error: sweep needs --c-min, --c-max and --steps", file=sys.stderr)
            return EXIT_INVALID
        if not (0 < config.c_min < config.c_max) or config.steps < 2:
            print("error: sweep needs 0 < c-min < c-max and steps >= 2", file=sys.stderr)
            return EXIT_INVALID

    status = EXIT_OK
    meta_extra = None
    try:
        if config.command == "classify":
            rows = _cmd_classify(config, params)
        elif config.command == "predict":
            rows = _cmd_predict(config, params)
        elif config.command == "zeros":
            rows = _cmd_zeros(config, params)
        elif config.command == "thresholds":
            rows = _cmd_thresholds(config, params)
        elif config.command == "sweep":
            rows, meta_extra = _cmd_sweep(config, params)
        elif config.command == "verify":
            rows, ok = _cmd_verify(config, params)
            if not ok:
                status = EXIT_MISMATCH
        else:
            print(f"error: unknown command {config.command!r}", file=sys.stderr)
            return EXIT_INVALID
    except (BracketFailure, ResolutionTooCoarse) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL

    text = _emit(config, rows, meta_extra)
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        return default


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rayzeros",
        description="Count and locate the zeros of z^m + c(z^k + conj(z)^k) - 1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_c: bool):
        p.add_argument("--m", type=int, required=True, help="degree of the analytic term")
        p.add_argument("--k", type=int, required=True, help="degree of the middle terms (may be negative)")
        if needs_c:
            p.add_argument("--c", type=float, required=True, help="family parameter, c > 0")
        else:
            p.add_argument("--c", type=float, default=1.0, help="family parameter, c > 0 (default 1)")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", default=None, help="write to this path instead of stdout")
        p.add_argument("--tol-radius", type=float, default=None, help="relative radius tolerance")
        p.add_argument("--tol-residual", type=float, default=None, help="relative residual tolerance")

    add_common(sub.add_parser("classify", help="per-ray case labels and counts"), needs_c=False)
    add_common(sub.add_parser("predict", help="global count bounds, both derivations"), needs_c=False)
    add_common(sub.add_parser("zeros", help="locate every zero"), needs_c=True)
    add_common(sub.add_parser("thresholds", help="critical values of c with their rays"), needs_c=False)

    sweep = sub.add_parser("sweep", help="zero count across a range of c")
    add_common(sweep, needs_c=False)
    sweep.add_argument("--c-min", type=float, required=True)
    sweep.add_argument("--c-max", type=float, required=True)
    sweep.add_argument("--steps", type=int, required=True)
    sweep.add_argument("--spacing", choices=("linear", "log"), default="linear")

    verify = sub.add_parser("verify", help="cross-validate predictions, zeros and the grid oracle")
    add_common(verify, needs_c=True)
    verify.add_argument("--resolution", type=int, default=256, help="oracle grid resolution")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    radius = args.tol_radius if args.tol_radius is not None else _env_float("TOL_RADIUS", 1e-12)
    residual = args.tol_residual if args.tol_residual is not None else _env_float("TOL_RESIDUAL", 1e-10)
    config = RunConfig(
        command=args.command,
        m=args.m,
        k=args.k,
        c=args.c,
        c_min=getattr(args, "c_min", None),
        c_max=getattr(args, "c_max", None),
        steps=getattr(args, "steps", None),
        spacing=getattr(args, "spacing", "linear"),
        format=args.format,
        output=args.output,
        resolution=getattr(args, "resolution", 256),
        tolerances=Tolerances(radius_rtol=radius, residual_rtol=residual),
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
