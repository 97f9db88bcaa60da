"""Command line: mertens X [--c C] [--threads N] [--mode MODE] [--csv] [--x-list ...]."""

from __future__ import annotations

import argparse
import logging
import os
import re
import sys

from .arith import DomainError
from .driver import (DEFAULT_C, MODES, VERIFY_CAP, GuardRefused, RunConfig, RunReport,
                     VerifyMismatch, bench_scaling, mertens)

EXIT_OK, EXIT_GUARD, EXIT_MISMATCH = 0, 2, 3

_POW = re.compile(r"^\s*(\d+)\s*(\^|\*\*)\s*(\d+)\s*$")
_SCI = re.compile(r"^\s*(\d+)[eE](\d+)\s*$")


def parse_x(text: str) -> int:
    """An integer written plainly, as b^e / b**e, or as d e k (exact only)."""
    t = text.strip().replace("_", "")
    if t.isdigit():
        return int(t)
    m = _POW.match(t)
    if m:
        return int(m.group(1)) ** int(m.group(3))
    m = _SCI.match(t)
    if m:
        return int(m.group(1)) * 10 ** int(m.group(2))
    raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def _x_list(text: str):
    return [parse_x(t) for t in text.split(",") if t.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mertens",
                                description="Exact value of M(x) = sum of mu(n), n <= x.")
    p.add_argument("x", nargs="?", type=parse_x, help="argument, e.g. 10^12 or 1e12")
    p.add_argument("--c", type=float, default=DEFAULT_C, help="tuning constant for v")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: $MERTENS_THREADS or 1)")
    p.add_argument("--mode", choices=MODES, default="elementary")
    p.add_argument("--csv", action="store_true", help="CSV output with phase timings")
    p.add_argument("--x-list", type=_x_list, default=None,
                   help="comma-separated arguments (bench mode, or several runs)")
    p.add_argument("--backend", choices=("c", "python"), default=None)
    p.add_argument("--shrink-c", action="store_true",
                   help="lower c until the overflow guard passes instead of refusing")
    p.add_argument("--verify-cap", type=parse_x, default=VERIFY_CAP)
    p.add_argument("--delta", type=int, default=None, help="window length for the non-free pass")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _threads(arg):
    if arg is not None:
        return arg
    env = os.environ.get("MERTENS_THREADS", "").strip()
    return int(env) if env else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    xs = args.x_list or ([args.x] if args.x is not None else [])
    if not xs:
        print("mertens: need X or --x-list", file=sys.stderr)
        return 1
    base = dict(c=args.c, threads=_threads(args.threads), backend=args.backend,
                shrink_c=args.shrink_c, verify_cap=args.verify_cap,
                nonfree_delta=args.delta, csv=args.csv)
    try:
        if args.mode == "bench":
            res = bench_scaling(sorted(xs), RunConfig(x=xs[0], **base))
            print(res.csv())
            return EXIT_OK
        if args.csv:
            print(RunReport.CSV_HEADER)
        for x in xs:
            rep = mertens(RunConfig(x=x, mode=args.mode, **base))
            print(rep.csv_row() if args.csv else f"M({x}) = {rep.mertens}", flush=True)
    except GuardRefused as exc:
        print(f"mertens: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except VerifyMismatch as exc:
        print(f"mertens: verify mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except DomainError as exc:
        print(f"mertens: {exc}", file=sys.stderr)
        return 1
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
