"""Exact integer arithmetic: floors, integer roots, intervals, Diophantine approximation.

Everything here works on Python ints and never rounds through floating point,
except where a float is only used as a seed that is corrected afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

#: isqrt accepts n < 2**ISQRT_BITS (the 128-bit kernel has the same limit).
ISQRT_BITS = 126


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


def isqrt(n: int) -> int:
    """Largest r with r*r <= n, for 0 <= n < 2**126.

    A float seed is refined by one Newton step and a final +-1 correction, so
    the answer does not depend on how the float square root was rounded.
    """
    n = int(n)
    if n < 0 or n >> ISQRT_BITS:
        raise OverflowError(f"isqrt argument out of range: {n}")
    if n < 2:
        return n
    r = int(math.sqrt(n))
    if r > 0:
        r = (r + n // r) >> 1
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def iroot(n: int, k: int) -> int:
    """Largest r >= 0 with r**k <= n (n >= 0)."""
    if n < 0:
        raise DomainError("iroot of a negative number")
    if n < 2 or k == 1:
        return n
    r = int(round(n ** (1.0 / k))) if n.bit_length() < 1000 else 1 << (n.bit_length() // k)
    while r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def mod_nonneg(a: int, q: int) -> int:
    """The representative of a modulo q in [0, q)."""
    if q <= 0:
        raise DomainError(f"modulus must be positive, got {q}")
    return a % q


def sgn(r) -> int:
    if isinstance(r, ExactRational):
        return r.sign
    return (r > 0) - (r < 0)


def flcong(n: int, a: int, q: int) -> int:
    """Largest integer <= n congruent to a mod q."""
    return n - mod_nonneg(n - a, q)


def floor_div(num: int, den: int) -> int:
    if den < 0:
        num, den = -num, -den
    return num // den


def ceil_div(num: int, den: int) -> int:
    if den < 0:
        num, den = -num, -den
    return -((-num) // den)


@dataclass(frozen=True, eq=False)
class ExactRational:
    """num/den with den > 0, kept unreduced; comparisons cross-multiply."""

    num: int
    den: int

    def __post_init__(self):
        if self.den == 0:
            raise ZeroDivisionError("ExactRational with zero denominator")
        if self.den < 0:
            object.__setattr__(self, "num", -self.num)
            object.__setattr__(self, "den", -self.den)

    @classmethod
    def of(cls, value) -> "ExactRational":
        if isinstance(value, ExactRational):
            return value
        if isinstance(value, int):
            return cls(value, 1)
        f = Fraction(value)
        return cls(f.numerator, f.denominator)

    @property
    def sign(self) -> int:
        return (self.num > 0) - (self.num < 0)

    def floor(self) -> int:
        return self.num // self.den

    def ceil(self) -> int:
        return -((-self.num) // self.den)

    def frac(self) -> "ExactRational":
        """Fractional part in [0, 1), same denominator."""
        return ExactRational(self.num % self.den, self.den)

    def _pair(self, other):
        o = ExactRational.of(other)
        return self.num * o.den, o.num * self.den

    def __eq__(self, other):
        if not isinstance(other, (ExactRational, int, Fraction)):
            return NotImplemented
        a, b = self._pair(other)
        return a == b

    def __hash__(self):
        return hash(Fraction(self.num, self.den))

    def __lt__(self, other):
        a, b = self._pair(other)
        return a < b

    def __le__(self, other):
        a, b = self._pair(other)
        return a <= b

    def __gt__(self, other):
        a, b = self._pair(other)
        return a > b

    def __ge__(self, other):
        a, b = self._pair(other)
        return a >= b

    def __neg__(self):
        return ExactRational(-self.num, self.den)

    def __add__(self, other):
        o = ExactRational.of(other)
        return ExactRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-ExactRational.of(other))

    def __rsub__(self, other):
        return ExactRational.of(other) - self

    def __mul__(self, other):
        o = ExactRational.of(other)
        return ExactRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = ExactRational.of(other)
        return ExactRational(self.num * o.den, self.den * o.num)

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __repr__(self):
        return f"ExactRational({self.num}, {self.den})"


Rationalish = Union[ExactRational, int, Fraction]


@dataclass(frozen=True)
class IntInterval:
    """A set of integers {n : lo <= n <= hi}; None stands for an infinite end.

    ``empty`` marks the empty set; bounded intervals are normalised so that an
    interval with lo > hi is always represented as empty.
    """

    lo: Optional[int] = None
    hi: Optional[int] = None
    empty: bool = False

    def __post_init__(self):
        if not self.empty and self.lo is not None and self.hi is not None and self.lo > self.hi:
            object.__setattr__(self, "empty", True)
        if self.empty:
            object.__setattr__(self, "lo", None)
            object.__setattr__(self, "hi", None)

    @classmethod
    def closed(cls, lo: int, hi: int) -> "IntInterval":
        return cls(lo, hi)

    @classmethod
    def at_least(cls, lo: int) -> "IntInterval":
        return cls(lo, None)

    @classmethod
    def at_most(cls, hi: int) -> "IntInterval":
        return cls(None, hi)

    @property
    def kind(self) -> str:
        if self.empty:
            return "empty"
        if self.lo is None and self.hi is None:
            return "all"
        if self.lo is None:
            return "left-infinite"
        if self.hi is None:
            return "right-infinite"
        return "bounded"

    def __contains__(self, n: int) -> bool:
        if self.empty:
            return False
        return (self.lo is None or n >= self.lo) and (self.hi is None or n <= self.hi)

    def shift(self, t: int) -> "IntInterval":
        if self.empty:
            return self
        return IntInterval(None if self.lo is None else self.lo + t,
                           None if self.hi is None else self.hi + t)

    def __and__(self, other: "IntInterval") -> "IntInterval":
        if self.empty or other.empty:
            return EMPTY
        if self.lo is None:
            lo = other.lo
        elif other.lo is None:
            lo = self.lo
        else:
            lo = max(self.lo, other.lo)
        if self.hi is None:
            hi = other.hi
        elif other.hi is None:
            hi = self.hi
        else:
            hi = min(self.hi, other.hi)
        return IntInterval(lo, hi)

    def complement_ray(self) -> "IntInterval":
        """Complement of a ray, of the empty set or of the whole line."""
        if self.empty:
            return ALL
        if self.lo is None and self.hi is None:
            return EMPTY
        if self.lo is None:
            return IntInterval(self.hi + 1, None)
        if self.hi is None:
            return IntInterval(None, self.lo - 1)
        raise DomainError("complement of a bounded interval is not an interval")


EMPTY = IntInterval(empty=True)
ALL = IntInterval()


def quad_ineq_z(a: int, b: int, c: int) -> IntInterval:
    """Integer solutions of a quadratic inequality as an interval.

    For a < 0 returns {n : a n^2 + b n + c >= 0}; for a > 0 returns
    {n : a n^2 + b n + c < 0}.  Both are intervals.
    """
    if a == 0:
        raise DomainError("quad_ineq_z needs a != 0")
    disc = b * b - 4 * a * c
    if disc < 0:
        return EMPTY
    s = isqrt(disc) if disc >> ISQRT_BITS == 0 else math.isqrt(disc)
    if a > 0:
        # roots excluded; a perfect square puts the roots on integers
        den = 2 * a
        if s * s != disc:
            lo, hi = ceil_div(-b - s, den), floor_div(-b + s, den)
        else:
            lo, hi = floor_div(-b - s, den) + 1, ceil_div(-b + s, den) - 1
    else:
        den = -2 * a
        lo, hi = ceil_div(b - s, den), floor_div(b + s, den)
    if lo <= hi:
        return IntInterval(lo, hi)
    return EMPTY


@dataclass(frozen=True)
class DiophApprox:
    """a0/q with gcd(a0, q) = 1, a0_inv = a0^-1 mod q, s = sgn(alpha - a0/q)."""

    a0: int
    a0_inv: int
    q: int
    s: int


def dioph_appr(alpha: Rationalish, Q: int) -> DiophApprox:
    """Continued-fraction approximation a0/q of alpha with q <= Q and
    |alpha - a0/q| <= 1/(q Q), run on the exact integer pair of alpha."""
    if Q < 1:
        raise DomainError("Q must be >= 1")
    alpha = ExactRational.of(alpha)
    num, den = alpha.num, alpha.den
    b = num // den
    p, q, pm, qm, s = b, 1, 1, 0, 1
    while q <= Q:
        rem = num - b * den
        if rem == 0:
            return DiophApprox(p, (-s * qm) % q, q, 0)
        num, den = den, rem
        b = num // den
        p, pm = b * p + pm, p
        q, qm = b * q + qm, q
        s = -s
    return DiophApprox(pm, (s * q) % qm, qm, -s)


def overflow_guard(x: int, v, b_max: int = 127) -> bool:
    """True iff 2 v^(16/3) / (6x)^(1/3) < 2**b_max, decided exactly.

    That quantity bounds q * m0^2 * n0^2, the largest integer formed in the
    linear-approximation pass.  Cubing both sides gives an exact test.
    """
    if x < 1 or v <= 0:
        raise DomainError("overflow_guard needs x >= 1 and v > 0")
    vf = Fraction(v)
    return 8 * vf ** 16 < Fraction(6 * x) * 2 ** (3 * b_max)


def overflow_bound_log2(x: int, v) -> float:
    """log2 of 2 v^(16/3) / (6x)^(1/3), for reporting."""
    return 1.0 + 16.0 / 3.0 * math.log2(v) - math.log2(6 * x) / 3.0


def discriminant_bound_log2(x: int, c: float) -> float:
    """log2 of the main term 16 c^(2/3) 6^(-2/3) x^(8/5) (loglog x / log x)^(2/5)
    bounding the discriminants met by quad_ineq_z."""
    lx = math.log(x)
    return (math.log2(16.0) + 2.0 / 3.0 * math.log2(c) - 2.0 / 3.0 * math.log2(6.0)
            + 1.6 * math.log2(x) + 0.4 * math.log2(math.log(lx) / lx))
