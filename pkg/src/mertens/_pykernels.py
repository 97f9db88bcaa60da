"""Pure-Python kernels (numpy where it vectorizes); reference for the C build."""

from __future__ import annotations

import numpy as np

from .arith import isqrt
from .divisor_sum import facto_sum_mu_ratio
from .sieve import seg_factor, seg_mu

NAME = "python"

#: Below this, x // (m n) and row sums of it stay inside int64.
_NUMPY_X = 2 ** 50
_CELLS = 1 << 21


def mu_window(n0: int, delta: int, primes) -> np.ndarray:
    """mu(n0), ..., mu(n0 + delta) as int8."""
    return seg_mu(n0, delta, primes).mu


def mertens_range(n0: int, n1: int, primes) -> int:
    """Sum of mu(n) for n0 <= n <= n1."""
    seg = max(isqrt(n1), 1 << 16)
    total = 0
    for lo in range(n0, n1 + 1, seg):
        hi = min(lo + seg - 1, n1)
        total += int(seg_mu(lo, hi - lo, primes).mu.sum(dtype=np.int64))
    return total


def d_values(x: int, r0: int, delta: int, primes=None) -> np.ndarray:
    """D(r; x/r) for r0 <= r <= r0 + delta."""
    out = np.empty(delta + 1, dtype=np.int64)
    start = r0
    if r0 == 1:
        out[0] = 1 if x >= 1 else 0
        start = 2
    if start <= r0 + delta:
        fac = seg_factor(start, r0 + delta - start)
        for j, F in enumerate(fac.factors):
            r = start + j
            out[r - r0] = facto_sum_mu_ratio(F, x, r)
    return out


def nonfree_scan(x, n, v, mu, mu_base, S, r0, sigma, total):
    """Advance the descending n loop until it leaves the mu or S window."""
    rmax = r0 + len(S) - 1
    while n > v and n >= mu_base:
        t = x // n
        if t > rmax:
            break
        m = int(mu[n - mu_base])
        if m:
            x2 = x // (n * n)
            sigma += m * x2
            total += 2 * m * (int(S[t - r0]) - sigma) + x2
        n -= 1
    return n, sigma, total


def brute_block(x: int, m0: int, n0: int, f, g) -> int:
    """Sum of f[i] g[j] floor(x / ((m0+i)(n0+j)))."""
    f = np.asarray(f)
    g = np.asarray(g)
    rows = np.flatnonzero(f)
    if len(rows) == 0 or not g.any():
        return 0
    if x >= _NUMPY_X:
        gl = [int(t) for t in g]
        return sum(int(f[i]) * sum(gj * (x // ((m0 + int(i)) * (n0 + j)))
                                   for j, gj in enumerate(gl) if gj)
                   for i in rows)
    cols = np.flatnonzero(g)
    nn = (n0 + cols).astype(np.int64)
    gw = g[cols].astype(np.int64)
    step = max(1, _CELLS // len(cols))
    total = 0
    for s in range(0, len(rows), step):
        ri = rows[s:s + step]
        mm = (m0 + ri).astype(np.int64)
        block = (x // (mm[:, None] * nn[None, :])) @ gw
        total += int(block @ f[ri].astype(np.int64))
    return total


def sum_by_lin(f, g, x, mc, nc, a, b) -> int:
    from .free import sum_by_lin as impl
    return impl(f, g, x, mc, nc, a, b)


def double_sum(m0, m1, n0, n1, a, b, f, g, x) -> int:
    from .free import sum_by_lin as impl
    S = 0
    fp = np.zeros(-(-(m1 - m0) // (2 * a)) * 2 * a, dtype=np.int8)
    fp[:m1 - m0] = f[:m1 - m0]
    gp = np.zeros(-(-(n1 - n0) // (2 * b)) * 2 * b, dtype=np.int8)
    gp[:n1 - n0] = g[:n1 - n0]
    for i in range(0, len(fp), 2 * a):
        ft = fp[i:i + 2 * a]
        if not ft.any():
            continue
        for j in range(0, len(gp), 2 * b):
            gt = gp[j:j + 2 * b]
            if gt.any():
                S += impl(ft, gt, x, m0 + i + a, n0 + j + b, a, b)
    return S
