"""Truncated divisor sums D(n; a) = sum of mu(d) over d | n with d <= a."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple

from .arith import ExactRational

Factors = Sequence[Tuple[int, int]]


def _validate(F: Factors):
    last = 1
    for p, e in F:
        if p <= last or e < 1:
            raise ValueError(f"malformed factor list: {list(F)}")
        last = p


def _threshold(a) -> Tuple[int, int]:
    if isinstance(a, ExactRational):
        num, den = a.num, a.den
    elif isinstance(a, int):
        num, den = a, 1
    else:
        f = Fraction(a)
        num, den = f.numerator, f.denominator
    if num < 0:
        raise ValueError("threshold must be nonnegative")
    return num, den


def _subfactsm(primes, k, m, mp, num, den, n, counter):
    # primes[:k] are still available; m is the divisor built so far and mp the
    # product of primes already excluded from it
    counter[0] += 1
    if m * den > num:
        return 0
    if k == 0:
        return 1
    if mp * num >= n * den:
        return 0
    p = primes[k - 1]
    return (_subfactsm(primes, k - 1, m, p * mp, num, den, n, counter)
            - _subfactsm(primes, k - 1, m * p, mp, num, den, n, counter))


def facto_sum_mu_counted(F: Factors, a) -> Tuple[int, int]:
    """D(n; a) together with the number of recursion nodes visited."""
    _validate(F)
    num, den = _threshold(a)
    primes = [p for p, _ in F]
    n = 1
    for p in primes:
        n *= p
    counter = [0]
    value = _subfactsm(primes, len(primes), 1, 1, num, den, n, counter)
    return value, counter[0]


def facto_sum_mu(F: Factors, a) -> int:
    """D(n; a) from the factorization F of n, largest primes split off first.

    ``a`` may be an int, a Fraction or an ExactRational; comparisons against
    it are done by cross-multiplication.
    """
    return facto_sum_mu_counted(F, a)[0]


def facto_sum_mu_ratio(F: Factors, x: int, r: int) -> int:
    """D(r; x/r) without forming x/r."""
    return facto_sum_mu(F, ExactRational(x, r))
