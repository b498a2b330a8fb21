"""Command-line front end.

Exit codes: 0 ok, 2 invalid input, 3 search failure, 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from contextlib import contextmanager
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, List, Optional, Sequence

from . import analytic
from .arith import FundamentalDiscriminant
from .cache import ClassNumberCache
from .errors import CapacityError, DomainError, SearchLimitError, ValidationError
from .search import (
    DEFAULT_SCAN_BOUND,
    MissingDiscriminantError,
    ScanRecord,
    SplitPrimeRecord,
    build_table,
    cached_class_number,
    max_discriminants,
    scan_min_x,
    smallest_split_prime,
)
from .table1 import BY_H

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_SEARCH = 3
EXIT_MISMATCH = 4

RATIO_TOL = 5e-5
TABLE_HEADER = ("h", "d", "p", "ratio")


def fmt_ratio(x: float) -> str:
    """Four decimals, halves rounded away from zero."""
    return str(Decimal(x).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP))


def fmt_real(x: float) -> str:
    return f"{x:.12g}"


# -- serializers -----------------------------------------------------------------


def records_csv(records: Iterable[SplitPrimeRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_HEADER)
    for r in records:
        w.writerow((r.h, r.d, r.p, fmt_ratio(r.ratio)))
    return buf.getvalue()


def records_json(records: Iterable[SplitPrimeRecord], extra: bool = False) -> str:
    rows = []
    for r in records:
        obj = {
            "h": r.h,
            "d": r.d,
            "p": r.p,
            "witness_x": r.witness.x,
            "witness_y": r.witness.y,
            "ratio": float(fmt_ratio(r.ratio)),
        }
        if extra and r.verified_no_smaller is not None:
            obj["verified_no_smaller"] = r.verified_no_smaller
        rows.append(obj)
    return json.dumps(rows, indent=1) + "\n"


def records_md(records: Iterable[SplitPrimeRecord]) -> str:
    lines = ["| $h_K$ | $d$ | $p$ | Ratio |", "|---:|---:|---:|---:|"]
    for r in records:
        lines.append(f"| {r.h} | {r.d} | {r.p} | {fmt_ratio(r.ratio)} |")
    return "\n".join(lines) + "\n"


def render_records(records: Sequence[SplitPrimeRecord], fmt: str) -> str:
    if fmt == "json":
        return records_json(records, extra=True)
    if fmt == "md":
        return records_md(records)
    return records_csv(records)


def parse_records_csv(text: str) -> List[tuple]:
    """(h, d, p, ratio_str) tuples from table CSV output."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(rows[0]) != TABLE_HEADER:
        raise ValueError("missing h,d,p,ratio header")
    return [(int(h), int(d), int(p), ratio) for h, d, p, ratio in rows[1:]]


def render_scan(records: Sequence[ScanRecord], fmt: str, threshold: float) -> str:
    if fmt == "json":
        body = {
            "records": [
                {"kind": r.kind, "key": r.key, "d": r.d, "value": r.value} for r in records
            ],
            "chowla_threshold": threshold,
        }
        return json.dumps(body, indent=1) + "\n"
    if fmt == "md":
        lines = ["| kind | key | $d$ | value |", "|---|---:|---:|---:|"]
        lines += [f"| {r.kind} | {r.key} | {r.d} | {fmt_real(r.value)} |" for r in records]
        lines.append("")
        lines.append(f"chowla_threshold = {fmt_real(threshold)}")
        return "\n".join(lines) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("kind", "key", "d", "value"))
    for r in records:
        w.writerow((r.kind, r.key, r.d, fmt_real(r.value)))
    buf.write(f"# chowla_threshold={fmt_real(threshold)}\n")
    return buf.getvalue()


# -- verification ------------------------------------------------------------------


def verify_records(records: Sequence[SplitPrimeRecord]) -> List[str]:
    """Per-row differences against the embedded reference table."""
    diffs = []
    for r in records:
        ref = BY_H.get(r.h)
        if ref is None:
            diffs.append(f"h={r.h}: no reference row")
            continue
        problems = []
        if r.d != ref.d:
            problems.append(f"d {r.d} != {ref.d}")
        if r.p != ref.p:
            problems.append(f"p {r.p} != {ref.p}")
        if not abs(r.ratio - float(ref.ratio_4dp)) <= RATIO_TOL:
            problems.append(f"ratio {r.ratio:.6f} != {ref.ratio_4dp}")
        if problems:
            diffs.append(f"h={r.h}: " + "; ".join(problems))
    return diffs


# -- commands ----------------------------------------------------------------------


def cmd_classnum(args, cache) -> int:
    d = FundamentalDiscriminant(args.d)
    args.emit(f"{cached_class_number(d, cache)}\n")
    return EXIT_OK


def cmd_split_prime(args, cache) -> int:
    d = FundamentalDiscriminant(args.d)
    h = cached_class_number(d, cache)
    rec = smallest_split_prime(d, paranoid=args.paranoid, h=h)
    if args.format == "text":
        out = (
            f"d={rec.d} h={rec.h} p={rec.p} "
            f"witness=({rec.witness.x},{rec.witness.y}) ratio={fmt_ratio(rec.ratio)}"
        )
        if rec.verified_no_smaller:
            out += " verified_no_smaller=true"
        args.emit(out + "\n")
    else:
        args.emit(render_records([rec], args.format))
    return EXIT_OK


def cmd_table(args, cache) -> int:
    records = build_table(
        args.hmax,
        source=args.source,
        bound=args.bound,
        workers=args.threads,
        paranoid=args.paranoid,
        cache=cache,
    )
    args.emit(render_records(records, "csv" if args.format == "text" else args.format))
    if args.verify:
        diffs = verify_records(records)
        for line in diffs:
            print(f"MISMATCH {line}", file=sys.stderr)
        if diffs:
            return EXIT_MISMATCH
        print(f"verified {len(records)} rows against the reference table", file=sys.stderr)
    return EXIT_OK


def cmd_scan_extreme(args, cache) -> int:
    records = scan_min_x(args.bound, workers=args.threads, cache=cache)
    fmt = "csv" if args.format == "text" else args.format
    args.emit(render_scan(records, fmt, analytic.chowla_threshold()))
    return EXIT_OK


def cmd_max_disc(args, cache) -> int:
    records = max_discriminants(args.hmax, args.bound, workers=args.threads, cache=cache)
    fmt = "csv" if args.format == "text" else args.format
    args.emit(render_scan(records, fmt, analytic.chowla_threshold()))
    return EXIT_OK


def cmd_bound(args, cache) -> int:
    d = FundamentalDiscriminant(args.d)
    if args.h < 1:
        raise ValidationError(f"h must be >= 1, got {args.h}")
    logD = analytic.log_disc(d, args.h)
    bound = analytic.bound_function(logD)
    fields = {"d": int(d), "h": args.h, "logD": logD, "bound": bound}
    if args.p is not None:
        fields["p"] = args.p
        fields["ratio"] = args.p / bound
    _emit_fields(args, fields)
    return EXIT_OK


def cmd_lvalue(args, cache) -> int:
    d = FundamentalDiscriminant(args.d)
    if d <= 4:
        raise DomainError(f"lvalue needs d > 4, got {d}")
    h = cached_class_number(d, cache)
    rep = analytic.lvalue_report(d, h, args.terms)
    fields = {
        "d": rep.d,
        "h": rep.h,
        "logD": analytic.log_disc(d, h),
        "l_exact": rep.l_exact,
        "l_series": rep.l_series,
        "x_d": rep.x_d,
    }
    _emit_fields(args, fields)
    return EXIT_OK


def _emit_fields(args, fields: dict) -> None:
    if args.format == "json":
        args.emit(json.dumps(fields) + "\n")
    elif args.format == "csv":
        args.emit(",".join(fields) + "\n" + ",".join(_plain(v) for v in fields.values()) + "\n")
    elif args.format == "md":
        args.emit(
            "| " + " | ".join(fields) + " |\n"
            + "|" + "---|" * len(fields) + "\n"
            + "| " + " | ".join(_plain(v) for v in fields.values()) + " |\n"
        )
    else:
        args.emit("".join(f"{k}={_plain(v)}\n" for k, v in fields.items()))


def _plain(v) -> str:
    if isinstance(v, float):
        return "nan" if math.isnan(v) else fmt_real(v)
    return str(v)


# -- argument parsing ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json", "md"), default="text")
    common.add_argument("--threads", type=int, default=1, help="worker processes (0 = auto)")
    common.add_argument(
        "--cache", default=None, help="class-number cache CSV (default: $SPLITPRIME_CACHE)"
    )
    common.add_argument("--out", default=None, help="write primary output to this file")

    p = argparse.ArgumentParser(
        prog="splitprime",
        description="Class numbers of imaginary quadratic fields and least primes "
        "splitting completely in their Hilbert class fields.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classnum", parents=[common], help="class number h(-d)")
    s.add_argument("d", type=int)
    s.set_defaults(func=cmd_classnum)

    s = sub.add_parser("split-prime", parents=[common], help="least completely split prime")
    s.add_argument("d", type=int)
    s.add_argument("--paranoid", action="store_true", help="also check every prime below d/4")
    s.set_defaults(func=cmd_split_prime)

    s = sub.add_parser("table", parents=[common], help="recompute the reference table")
    s.add_argument("--hmax", type=int, default=99)
    s.add_argument("--source", choices=("fixture", "scan"), default="fixture")
    s.add_argument("--bound", type=int, default=DEFAULT_SCAN_BOUND)
    s.add_argument("--verify", action="store_true")
    s.add_argument("--paranoid", action="store_true")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("scan-extreme", parents=[common], help="running minima of x_d")
    s.add_argument("--bound", type=int, required=True)
    s.set_defaults(func=cmd_scan_extreme)

    s = sub.add_parser("max-disc", parents=[common], help="largest d per class number")
    s.add_argument("--hmax", type=int, default=10)
    s.add_argument("--bound", type=int, default=DEFAULT_SCAN_BOUND)
    s.set_defaults(func=cmd_max_disc)

    s = sub.add_parser("bound", parents=[common], help="lower-bound function at log|D| = h log d")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--h", type=int, required=True)
    s.add_argument("--p", type=int, default=None, help="also report p / bound")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("lvalue", parents=[common], help="L(1, chi_d) two ways")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--terms", type=int, default=analytic.DEFAULT_SERIES_TERMS)
    s.set_defaults(func=cmd_lvalue)
    return p


@contextmanager
def _output(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cache = ClassNumberCache.from_env(args.cache)
        with _output(args.out) as fh:
            args.emit = fh.write
            code = args.func(args, cache)
        if cache is not None:
            cache.save()
        return code
    except (ValidationError, DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (SearchLimitError, MissingDiscriminantError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEARCH


if __name__ == "__main__":
    sys.exit(main())
