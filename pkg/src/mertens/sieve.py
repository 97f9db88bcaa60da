"""Segmented sieves of Eratosthenes: primes, Moebius values, factorizations.

Windows are inclusive: a call with (n, delta) covers n, n+1, ..., n+delta.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from .arith import isqrt

#: Wheel modulus 2^3 * 3^2 * 5 * 7 * 11 used to pre-initialise mu windows.
WHEEL = 2 ** 3 * 3 ** 2 * 5 * 7 * 11
_WHEEL_PRIMES = (2, 3, 5, 7, 11)


@dataclass
class PrimeFlags:
    base: int
    flags: np.ndarray

    def primes(self) -> np.ndarray:
        return np.flatnonzero(self.flags).astype(np.int64) + self.base


@dataclass
class MuSegment:
    base: int
    mu: np.ndarray

    def __getitem__(self, n: int) -> int:
        return int(self.mu[n - self.base])

    def __len__(self):
        return len(self.mu)


@dataclass
class FactorizationSegment:
    base: int
    factors: List[List[Tuple[int, int]]] = field(default_factory=list)

    def __getitem__(self, n: int) -> List[Tuple[int, int]]:
        return self.factors[n - self.base]


def simple_sieve(N: int) -> PrimeFlags:
    """Primality flags for 1..N (flags[k] refers to k+1)."""
    P = np.zeros(N + 1, dtype=bool)
    if N >= 2:
        P[2] = True
    P[3::2] = True
    m = 3
    while m * m <= N:
        if P[m]:
            P[m * m::2 * m] = False
        m += 2
    return PrimeFlags(1, P[1:])


def primes_upto(N: int) -> np.ndarray:
    if N < 2:
        return np.zeros(0, dtype=np.int64)
    return simple_sieve(N).primes()


def seg_primes(n: int, delta: int) -> PrimeFlags:
    """Primality flags for n..n+delta."""
    S = np.ones(delta + 1, dtype=bool)
    S[:max(0, min(delta + 1, 2 - n))] = False
    for p in primes_upto(isqrt(n + delta)).tolist():
        start = max(p * -(-n // p), 2 * p)
        if start <= n + delta:
            S[start - n::p] = False
    return PrimeFlags(n, S)


def _wheel_tables():
    r = np.arange(WHEEL, dtype=np.int64)
    mu = np.ones(WHEEL, dtype=np.int8)
    prod = np.ones(WHEEL, dtype=np.int64)
    for p in _WHEEL_PRIMES:
        hit = r % p == 0
        mu[hit] *= -1
        prod[hit] *= p
    mu[(r % 4 == 0) | (r % 9 == 0)] = 0
    return mu, prod


_wheel_cache = {}


def _wheel():
    if not _wheel_cache:
        _wheel_cache["t"] = _wheel_tables()
    return _wheel_cache["t"]


def _int_dtype(top: int):
    return np.int64 if top < 2 ** 62 else object


def ceil_log4(n):
    """Smallest k with 4**k >= n, elementwise for numpy int arrays."""
    n = np.asarray(n, dtype=np.int64)
    # bit length of n-1 via frexp is exact for n < 2**53
    bl = np.frexp((n - 1).astype(np.float64))[1]
    return (bl + 1) // 2


def seg_mu(n0: int, delta: int, primes: np.ndarray = None, *,
           wheel: bool = False, log4: bool = False) -> MuSegment:
    """mu(n0 + j) for 0 <= j <= delta.

    ``wheel`` copies a precomputed residue pattern modulo WHEEL before sieving
    the remaining primes; ``log4`` tracks sums of ceil(log4 p) instead of the
    products of the small primes.  All variants return identical values.
    """
    if n0 < 1:
        raise ValueError("seg_mu needs n0 >= 1")
    top = n0 + delta
    if primes is None:
        primes = primes_upto(isqrt(top))
    else:
        primes = primes[primes <= isqrt(top)]
    size = delta + 1
    if log4 and top >= 2 ** 53:
        log4 = False
    if wheel:
        wmu, wprod = _wheel()
        idx = (np.arange(size, dtype=np.int64) + (n0 % WHEEL)) % WHEEL
        m = wmu[idx].copy()
        if log4:
            track = np.zeros(size, dtype=np.int64)
            for p in _WHEEL_PRIMES:
                track[((n0 + np.arange(size)) % p) == 0] += int(ceil_log4(p))
        else:
            track = wprod[idx].astype(_int_dtype(top))
        skip = set(_WHEEL_PRIMES)
        squares_only = {5, 7, 11}
    else:
        m = np.ones(size, dtype=np.int8)
        track = np.zeros(size, dtype=np.int64) if log4 else np.ones(size, dtype=_int_dtype(top))
        skip = set()
        squares_only = set()
    for p in primes.tolist():
        if p not in skip:
            start = -(-n0 // p) * p - n0
            if start < size:
                m[start::p] *= -1
                if log4:
                    track[start::p] += int(ceil_log4(p))
                else:
                    track[start::p] *= p
        if p not in skip or p in squares_only:
            p2 = p * p
            start = -(-n0 // p2) * p2 - n0
            if start < size:
                m[start::p2] = 0
    nums = np.arange(n0, top + 1, dtype=_int_dtype(top))
    if log4:
        flip = (m != 0) & (track < ceil_log4(nums))
    else:
        flip = (m != 0) & (track != nums)
    m[flip] *= -1
    return MuSegment(n0, m)


def sub_seg_sieve_fac(n: int, delta: int, M: int):
    """Prime factors p <= M of n..n+delta, plus the M-smooth part of each.

    Primes are produced block by block (blocks of length isqrt(M)) so that
    only O(sqrt M) flags are held at a time.
    """
    if n < 1 or M < 2:
        raise ValueError("sub_seg_sieve_fac needs n >= 1 and M >= 2")
    F: List[List[Tuple[int, int]]] = [[] for _ in range(delta + 1)]
    Pi = [1] * (delta + 1)
    top = n + delta
    step = max(isqrt(M), 1)
    lo = 1
    while lo <= M:
        block = seg_primes(lo, min(step - 1, M - lo))
        for p in block.primes().tolist():
            k, d = 1, p
            while d <= top:
                j = -(-n // d) * d - n
                while j <= delta:
                    if k == 1:
                        F[j].append((p, 1))
                    else:
                        F[j][-1] = (p, k)
                    Pi[j] *= p
                    j += d
                k += 1
                d *= p
        lo += step
    return FactorizationSegment(n, F), Pi


def seg_factor(n: int, delta: int) -> FactorizationSegment:
    """Complete factorizations of n..n+delta (n >= 2)."""
    if n < 2:
        raise ValueError("seg_factor needs n >= 2")
    M = max(isqrt(n + delta), 2)
    seg, Pi = sub_seg_sieve_fac(n, delta, M)
    for j in range(delta + 1):
        if Pi[j] != n + j:
            seg.factors[j].append(((n + j) // Pi[j], 1))
    return seg


@dataclass(frozen=True)
class PackedFactors:
    """Distinct primes in two equal-length bitstrings.

    Each prime p contributes a field of k = floor(log2 p) bits: ``a`` holds a
    single marker bit at the top of the field, ``b`` holds p - 2^k.
    """

    a_bits: int
    b_bits: int
    nbits: int

    def __str__(self):
        if self.nbits == 0:
            return "(, )"
        return f"({self.a_bits:0{self.nbits}b}, {self.b_bits:0{self.nbits}b})"


def pack_factors(primes: Sequence[int]) -> PackedFactors:
    a = b = nbits = 0
    last = 1
    for p in primes:
        p = int(p)
        if p <= last:
            raise ValueError("primes must be strictly increasing and >= 2")
        last = p
        k = p.bit_length() - 1
        a = (a << k) | (1 << (k - 1)) if k else a
        b = (b << k) | (p - (1 << k))
        nbits += k
    return PackedFactors(a, b, nbits)


def unpack_factors(packed: PackedFactors, descending: bool = False) -> List[int]:
    """Read the primes back, in insertion order or reversed."""
    a, b, n = packed.a_bits, packed.b_bits, packed.nbits
    out = []
    if descending:
        while a:
            k = (a & -a).bit_length()  # marker at bit k-1
            out.append((1 << k) | (b & ((1 << k) - 1)))
            a >>= k
            b >>= k
        return out
    while n:
        # marker of the next field is the highest set bit
        top = a.bit_length()
        rest = a ^ (1 << (top - 1))
        k = top - rest.bit_length()
        shift = top - k
        field_b = (b >> shift) & ((1 << k) - 1)
        out.append((1 << k) | field_b)
        a = rest
        b &= (1 << shift) - 1
        n = shift
    return out
