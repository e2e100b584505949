"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
Quantities that can leave double range are written as natural logs under
keys or columns prefixed ``log:``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import envelope, hermite, verify, zeros
from .certificates import certify
from .numeric_core import DEFAULT_REL_TOL

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
_LOG_CUTOFF = 700.0


class UsageError(Exception):
    pass


def fmt(v) -> str:
    """15 significant digits, stable across runs."""
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    return format(v, ".15g")


def _num(v):
    # JSON-safe float rounded to 15 significant digits
    return None if v is None else float(format(v, ".15g"))


def _plain(log_value):
    if log_value is None or log_value > _LOG_CUTOFF:
        return None
    return _num(math.exp(log_value))


@dataclass(frozen=True)
class SweepConfig:
    k_min: int
    k_max: int
    stride: int = 1
    format: str = "csv"
    rel_tol: float = DEFAULT_REL_TOL
    parallel: bool = False

    def __post_init__(self):
        if self.k_min < 1:
            raise UsageError("k_min must be >= 1")
        if self.k_min > self.k_max:
            raise UsageError("k_min must not exceed k_max")
        if self.stride < 1:
            raise UsageError("stride must be >= 1")
        if self.format not in ("csv", "json"):
            raise UsageError("format must be csv or json")
        if not 0 < self.rel_tol <= 1e-3:
            raise UsageError("tolerance must lie in (0, 1e-3]")

    @property
    def ks(self) -> list[int]:
        return list(range(self.k_min, self.k_max + 1, self.stride))


def report_dict(k: int, rel_tol: float = DEFAULT_REL_TOL) -> dict:
    r = envelope.compute_Mk(k, rel_tol)
    return {
        "k": k,
        "log:Ck": _num(r.ln_Ck),
        "omega": _num(r.omega),
        "omega_upper": _num(r.omega_upper),
        "Mk": _plain(r.ln_Mk),
        "log:Mk": _num(r.ln_Mk),
        "lower": _plain(r.ln_lower),
        "log:lower": _num(r.ln_lower),
        "upper": _plain(r.ln_upper),
        "log:upper": _num(r.ln_upper),
        "ratio": _num(r.ratio_Mk_Ck),
        "sandwich_ok": r.sandwich_ok,
    }


SWEEP_COLUMNS = ("k", "ratio", "lower_over_Ck", "upper_over_Ck", "omega_offset", "y_offset")


def sweep_row(k: int, rel_tol: float = DEFAULT_REL_TOL) -> dict:
    r = envelope.compute_Mk(k, rel_tol)
    lo = hi = None
    if k >= envelope.THEOREM_MIN_K:
        lo, hi = envelope.theorem1_bounds(k, scaled=True)
    return {"k": k, "ratio": r.ratio_Mk_Ck, "lower_over_Ck": lo, "upper_over_Ck": hi,
            "omega_offset": r.omega_offset,
            "y_offset": (2 * k - r.omega ** 2) / (2 * k) ** (1 / 3)}


def _sweep_rows(cfg: SweepConfig) -> list[dict]:
    if cfg.parallel and len(cfg.ks) > 1:
        with ProcessPoolExecutor() as pool:
            # map preserves input order
            return list(pool.map(sweep_row, cfg.ks, [cfg.rel_tol] * len(cfg.ks),
                                 chunksize=max(1, len(cfg.ks) // 64)))
    return [sweep_row(k, cfg.rel_tol) for k in cfg.ks]


def write_csv(rows: list[dict], columns, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([fmt(row[c]) for c in columns])


def write_json(rows: list[dict], out) -> None:
    clean = [{key: (_num(v) if isinstance(v, float) else v) for key, v in r.items()}
             for r in rows]
    json.dump(clean, out, indent=1)
    out.write("\n")


def plot_envelope(k: int, npoints: int = 400) -> tuple[tuple, list[dict]]:
    xs = np.linspace(0.0, math.sqrt(2 * k + 1), npoints)
    lw = hermite.log_weighted_square_grid(k, xs)
    rows = []
    for xv, val in zip(xs, lw):
        y = hermite.y_of(k, float(xv))
        up = lo = None
        if y >= 2:
            up = envelope.log_upper_envelope(k, y)
            lo = envelope.log_lower_envelope(k, y)
        rows.append({"x": float(xv), "log:weighted_square": float(val) if np.isfinite(val) else None,
                     "log:upper_envelope": up, "log:lower_envelope": lo})
    return ("x", "log:weighted_square", "log:upper_envelope", "log:lower_envelope"), rows


def plot_ratio(ks) -> tuple[tuple, list[dict]]:
    rows = [{"k": k, "ratio": envelope.compute_Mk(k).ratio_Mk_Ck} for k in ks]
    return ("k", "ratio"), rows


def plot_zero_bounds(ks) -> tuple[tuple, list[dict]]:
    rows = []
    for k in ks:
        b = zeros.largest_zero_bounds(k)
        rows.append({"k": k, "lower": b.lower, "x_kk": zeros.find_largest_zero(k),
                     "upper": b.upper})
    return ("k", "lower", "x_kk", "upper"), rows


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermite-bounds",
        description="Envelopes, maxima and extreme zeros of weighted Hermite polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="per-k report of M_k and its bounds (JSON)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_REL_TOL)

    p = sub.add_parser("sweep", help="ratio M_k/C_k and omega offset over a k range")
    p.add_argument("--k-min", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--stride", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--tol", type=float, default=DEFAULT_REL_TOL)
    p.add_argument("--parallel", action="store_true")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")

    p = sub.add_parser("plotdata", help="CSV columns for external plotting")
    p.add_argument("quantity", choices=("envelope", "ratio", "zero-bounds"))
    p.add_argument("--k", type=int)
    p.add_argument("--k-min", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--stride", type=int, default=1)

    p = sub.add_parser("certify", help="print exact certificates")
    p.add_argument("--target", default="all",
                   choices=("all", "incr:A", "incr:B", "incr:F-radicand", "xt:U",
                            "ozkor:final-step"))
    return parser


def _cmd_report(args, out) -> int:
    if args.k < 1:
        raise UsageError("k must be >= 1")
    if not 0 < args.tol <= 1e-3:
        raise UsageError("tolerance must lie in (0, 1e-3]")
    json.dump(report_dict(args.k, args.tol), out, indent=1)
    out.write("\n")
    return EXIT_OK


def _cmd_sweep(args, out) -> int:
    cfg = SweepConfig(args.k_min, args.k_max, args.stride, args.format, args.tol, args.parallel)
    rows = _sweep_rows(cfg)
    if cfg.format == "csv":
        write_csv(rows, SWEEP_COLUMNS, out)
    else:
        write_json(rows, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    failed = None
    for r in verify.run_suite(args.suite):
        out.write(r.line() + "\n")
        if not r.ok and failed is None:
            failed = r
    if failed is not None:
        out.write(f"first failure: {failed.name} {failed.detail}\n")
        return EXIT_FAIL
    return EXIT_OK


def _k_range(args) -> list[int]:
    if args.k_min is None or args.k_max is None:
        raise UsageError("--k-min and --k-max are required")
    return SweepConfig(args.k_min, args.k_max, args.stride).ks


def _cmd_plotdata(args, out) -> int:
    if args.quantity == "envelope":
        if args.k is None or args.k < 1:
            raise UsageError("envelope needs --k >= 1")
        cols, rows = plot_envelope(args.k)
    elif args.quantity == "ratio":
        cols, rows = plot_ratio(_k_range(args))
    else:
        ks = _k_range(args)
        if ks[0] < 3:
            raise UsageError("zero bounds need k >= 3")
        cols, rows = plot_zero_bounds(ks)
    write_csv(rows, cols, out)
    return EXIT_OK


def _cmd_certify(args, out) -> int:
    certs = certify.all_certificates()
    if args.target != "all":
        certs = [c for c in certs if c.target == args.target]
    for c in certs:
        out.write(c.to_text())
        out.write("\n")
    return EXIT_OK if all(c.verdict for c in certs) else EXIT_FAIL


_COMMANDS = {"report": _cmd_report, "sweep": _cmd_sweep, "verify": _cmd_verify,
             "plotdata": _cmd_plotdata, "certify": _cmd_certify}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as e:
        sys.stderr.write(f"hermite-bounds: error: {e}\n")
        return EXIT_USAGE
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK


def run(argv=None) -> str:
    """Run the CLI and capture stdout; handy in notebooks and tests."""
    buf = io.StringIO()
    main(argv, buf)
    return buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
