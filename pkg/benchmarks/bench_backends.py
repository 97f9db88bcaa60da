"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_backends.py [--repeat N] [--x X]

Each row times one kernel on the same inputs under both backends and checks
that the answers agree.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

import numpy as np

from mertens import _backend
from mertens.driver import mertens_elementary
from mertens.free import neighborhood_sizes
from mertens.sieve import primes_upto


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases(x_end):
    rng = random.Random(0)
    P = primes_upto(2 ** 17)
    f = np.array([rng.choice((-1, 0, 1)) for _ in range(2000)], dtype=np.int8)
    g = np.array([rng.choice((-1, 0, 1)) for _ in range(2000)], dtype=np.int8)
    x = 10 ** 14
    a, b = neighborhood_sizes(x, 20000, 20000)
    fa, gb = f[:2 * a], g[:2 * b]
    return [
        ("mu_window 10^6 @ 10^10", lambda k: k.mu_window(10 ** 10, 10 ** 6, P)),
        ("d_values 10^4 @ r=10^6", lambda k: k.d_values(10 ** 14, 10 ** 6, 10 ** 4, P)),
        ("brute_block 2000^2", lambda k: k.brute_block(10 ** 12, 1000, 1000, f, g)),
        (f"sum_by_lin a={a} b={b}", lambda k: k.sum_by_lin(fa, gb, x, 20000 + a, 20000 + b,
                                                            a, b)),
        (f"elementary M({x_end})", lambda k: mertens_elementary(x_end, backend=k)),
    ]


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--x", type=int, default=10 ** 9, help="argument for the end-to-end row")
    args = p.parse_args(argv)
    if "c" not in _backend.available():
        print("compiled kernels not built; nothing to compare", file=sys.stderr)
        return 1
    c, py = _backend.get("c"), _backend.get("python")
    print(f"{'kernel':32s} {'c [s]':>10s} {'python [s]':>11s} {'speedup':>8s}")
    ok = True
    for name, fn in cases(args.x):
        tc, oc = best_of(lambda: fn(c), args.repeat)
        tp, op = best_of(lambda: fn(py), args.repeat)
        same = np.array_equal(oc, op) if isinstance(oc, np.ndarray) else oc == op
        ok &= bool(same)
        print(f"{name:32s} {tc:10.4f} {tp:11.4f} {tp / max(tc, 1e-9):7.1f}x"
              + ("" if same else "  MISMATCH"))
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
