"""Pass over pairs (m1, m2) with max(m1, m2) > v, and the brute-force M(x)."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _backend
from .arith import DomainError, isqrt
from .sieve import primes_upto


def ceil_sqrt(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


def brute_m(x: int, backend=None) -> int:
    """M(x) by sieving mu over [1, x] in segments."""
    if x < 1:
        return 0
    kern = _backend.for_x(x, backend)
    return kern.mertens_range(1, x, primes_upto(isqrt(x)))


@dataclass
class PrefixSumWindow:
    """S[j] = sum of D(r; x/r) over r <= r0 + j."""

    r0: int
    S: np.ndarray

    @property
    def delta(self) -> int:
        return len(self.S) - 1

    def last(self) -> int:
        return int(self.S[-1])

    def at(self, r: int) -> int:
        return int(self.S[r - self.r0])


def _split(lo: int, hi: int, parts: int):
    """Split the inclusive range [lo, hi] into at most ``parts`` pieces."""
    n = hi - lo + 1
    parts = max(1, min(parts, n))
    step = -(-n // parts)
    return [(s, min(s + step - 1, hi)) for s in range(lo, hi + 1, step)]


def sarr(x: int, r0: int, delta: int, S0: int, *, threads: int = 1,
         primes: np.ndarray = None, backend=None, pool=None) -> PrefixSumWindow:
    """Resumable prefix sums of D(r; x/r) over r0 <= r <= r0 + delta.

    ``S0`` must be the sum over r < r0.  The window is cut into blocks that
    are factored independently; block totals are scanned sequentially and
    added back as offsets, so the result does not depend on ``threads``.
    """
    if r0 < 1 or delta < 0:
        raise DomainError("sarr needs r0 >= 1 and delta >= 0")
    kern = _backend.for_x(x, backend)
    if primes is None:
        primes = primes_upto(isqrt(r0 + delta))
    blocks = _split(r0, r0 + delta, threads)

    def work(blk):
        lo, hi = blk
        return np.cumsum(kern.d_values(x, lo, hi - lo, primes), dtype=np.int64)

    if len(blocks) == 1:
        local = [work(blocks[0])]
    elif pool is not None:
        local = list(pool.map(work, blocks))
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            local = list(ex.map(work, blocks))
    offset = S0
    out = []
    for part in local:
        out.append(part + offset)
        offset += int(part[-1])
    return PrefixSumWindow(r0, np.concatenate(out))


def default_delta(x: int, v: int, u: int) -> int:
    """Smallest window length d with d^2 >= max(u, x/v)."""
    return max(ceil_sqrt(max(u, -(-x // v))), 1)


def large_nonfree(x: int, v: int, u: int, *, delta: int = None, threads: int = 1,
                  backend=None) -> int:
    """Sum of mu(m1) mu(m2) floor(x/(m1 m2)) over m1, m2 <= u, max(m1, m2) > v.

    n runs down from u to v+1 keeping sigma = sum_{b >= n} mu(b) floor(x/b^2)
    while a window of prefix sums S(r) = sum_{r' <= r} D(r'; x/r') streams
    forward over r = floor(x/n).
    """
    if not 1 <= v <= u:
        raise DomainError(f"large_nonfree needs 1 <= v <= u, got v={v}, u={u}")
    if u * u > x:
        raise DomainError("u must not exceed sqrt(x)")
    if v == u:
        return 0
    kern = _backend.for_x(x, backend)
    d0 = default_delta(x, v, u)
    if delta is None:
        delta = d0
    elif delta < d0:
        raise DomainError(f"window length {delta} below the minimum {d0}")

    r0 = x // (u + 1) + 1
    primes_r = primes_upto(isqrt(x // (v + 1) + 2 * delta + 2))
    primes_n = primes_upto(isqrt(u))
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        W = sarr(x, r0, delta, 1, threads=threads, primes=primes_r, backend=kern, pool=pool)
        mu_base = u + 1
        mu = None
        n = u
        sigma = total = 0
        while n > v:
            if n < mu_base:
                mu_base = max(mu_base - (delta + 1), 1)
                mu = kern.mu_window(mu_base, delta, primes_n)
            while x // n > W.r0 + delta:
                W = sarr(x, W.r0 + delta + 1, delta, W.last(), threads=threads,
                         primes=primes_r, backend=kern, pool=pool)
            n, sigma, total = kern.nonfree_scan(x, n, v, mu, mu_base, W.S, W.r0,
                                                sigma, total)
    finally:
        if pool is not None:
            pool.shutdown()
    return total


def large_nonfree_oracle(x: int, v: int, u: int) -> int:
    """Direct double loop over m1, m2 <= u (numpy, row by row)."""
    from .sieve import seg_mu
    if u < 1:
        return 0
    mu = seg_mu(1, u - 1).mu.astype(np.int64)
    ms = np.arange(1, u + 1, dtype=np.int64)
    total = 0
    for m1 in range(1, u + 1):
        if mu[m1 - 1] == 0:
            continue
        row = mu * (x // (m1 * ms))
        if m1 <= v:
            row = row[v:]
        total += int(mu[m1 - 1]) * int(row.sum())
    return total
