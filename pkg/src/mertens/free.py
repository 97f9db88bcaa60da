"""Pass over pairs (m, n) with both m, n <= v.

The box [1, v]^2 is cut into neighborhoods [m0-a, m0+a) x [n0-b, n0+b) on
which x/(mn) is within 1/(2b) of its tangent plane.  On such a neighborhood

    L0 = floor(R0) + floor(alpha2 n),  L1 = floor(R0 + alpha2 n),
    L2 = floor(x / ((m0+m)(n0+n))),    R0 = alpha0 + alpha1 m,

and the sum of f(m) g(n) L2 equals a separable sum of L0 plus corrections
L2 - L0 that live on a few residue classes of n modulo the denominator q of
a rational approximation a0/q to alpha2.  Every correction is a table lookup
over an interval of n, so a neighborhood costs O(a + b) instead of O(ab).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from . import _backend
from .arith import (ALL, EMPTY, DomainError, ExactRational, IntInterval, dioph_appr,
                    flcong, iroot, isqrt, quad_ineq_z, sgn)
from .sieve import primes_upto


# ---------------------------------------------------------------------------
# neighborhoods and the linear model


@dataclass(frozen=True)
class Neighborhood:
    m_center: int
    n_center: int
    a_half: int
    b_half: int

    def valid(self, x: int) -> bool:
        return neighborhood_valid(x, self.m_center, self.n_center, self.a_half, self.b_half)


@dataclass(frozen=True)
class LinearModel:
    alpha0: ExactRational
    alpha1: ExactRational
    alpha2: ExactRational

    @classmethod
    def at(cls, x: int, mc: int, nc: int) -> "LinearModel":
        return cls(ExactRational(x, mc * nc), ExactRational(-x, mc * mc * nc),
                   ExactRational(-x, mc * nc * nc))

    def value(self, m: int, n: int) -> ExactRational:
        return self.alpha0 + self.alpha1 * m + self.alpha2 * n


def neighborhood_sizes(x: int, A: int, B: int):
    """Half-widths (a, b) = (cbrt(A^4/6x), cbrt(A B^3/6x)), floored."""
    return iroot(A ** 4 // (6 * x), 3), iroot(A * B ** 3 // (6 * x), 3)


def neighborhood_valid(x: int, mc: int, nc: int, a: int, b: int) -> bool:
    """Sufficient test that 0 <= ET_quad <= 1/(2b) on the neighborhood.

    With A = mc - a and B = nc - b the three second-order terms of x/(mn)
    are each at most 1/(6b) when 6x a^2 b <= A^3 B and 6x b^3 <= A B^3.
    """
    A, B = mc - a, nc - b
    if a < 1 or b < 1 or A < 1 or B < 1:
        return False
    return 6 * x * a * a * b <= A ** 3 * B and 6 * x * b ** 3 <= A * B ** 3


def et_quad(x: int, mc: int, nc: int, m: int, n: int) -> ExactRational:
    """x/(mn) minus its tangent plane at (mc, nc), at offsets (m, n)."""
    return ExactRational(x, (mc + m) * (nc + n)) - LinearModel.at(x, mc, nc).value(m, n)


def point_floors(x: int, mc: int, nc: int, m: int, n: int):
    """(L0, L1, L2) at offsets (m, n), exactly."""
    lm = LinearModel.at(x, mc, nc)
    R0 = lm.alpha0 + lm.alpha1 * m
    an = lm.alpha2 * n
    return R0.floor() + an.floor(), (R0 + an).floor(), x // ((mc + m) * (nc + n))


# ---------------------------------------------------------------------------
# tables


@dataclass
class CongruenceTables:
    """G[n + b] = sum of g(n') over -b <= n' <= n with n' = n mod q."""

    G: list
    rho: list
    sigma: list
    b: int
    q: int

    def F(self, n: int) -> int:
        return self.G[n + self.b]


def sum_table(g: Sequence[int], b: int, a0: int, q: int) -> CongruenceTables:
    if q > 2 * b:
        raise DomainError(f"sum_table needs q <= 2b, got q={q}, b={b}")
    G = [int(t) for t in g]
    for i in range(q, 2 * b):
        G[i] += G[i - q]
    rho = [0] * q
    r = (a0 * (b - q)) % q
    for n in range(b - q, b):
        rho[r] = G[n + b]
        r = (r + a0) % q
    sigma = [0] * (q + 1)
    for r in range(1, q):
        sigma[r + 1] = sigma[r] + rho[q - r]
    return CongruenceTables(G, rho, sigma, b, q)


def ray_sum(g: Sequence[int], q: int, b: int, sdelta: int) -> int:
    """Sum of g over nonzero multiples of q on the side where delta*n < 0."""
    if sdelta < 0:
        return int(sum(int(g[n + b]) for n in range(q, b, q)))
    if sdelta > 0:
        return int(sum(int(g[b - n]) for n in range(q, b + 1, q)))
    return 0


def sum_inter(F, r: int, I: IntInterval, b: int, q: int) -> int:
    """Sum of g(n) over n in I and [-b, b) with n = r mod q."""
    if I.empty:
        return 0
    G = F.G if isinstance(F, CongruenceTables) else F
    hi = b - 1 if I.hi is None else min(I.hi, b - 1)
    r1 = flcong(hi, r, q)
    if r1 < -b:
        return 0
    if I.lo is None:
        return G[r1 + b]
    r0 = flcong(I.lo - 1, r, q)
    if r0 > r1:
        return 0
    if r0 >= -b:
        return G[r1 + b] - G[r0 + b]
    return G[r1 + b]


# ---------------------------------------------------------------------------
# per-m data


@dataclass(frozen=True)
class CorrectionContext:
    """Quantities attached to one offset m of a neighborhood."""

    m: int
    m_abs: int
    R0: ExactRational
    r0: int
    beta: ExactRational
    Q_ratio: ExactRational
    sign_beta: int
    sign_delta: int

    @property
    def R0_floor(self) -> int:
        return self.R0.floor()


@dataclass(frozen=True)
class LinearSetup:
    """Neighborhood-level data shared by every m."""

    x: int
    mc: int
    nc: int
    a: int
    b: int
    a0: int
    a0_inv: int
    q: int
    delta_num: int  # delta = alpha2 - a0/q = delta_num / (q mc nc^2)

    @classmethod
    def build(cls, x: int, mc: int, nc: int, a: int, b: int) -> "LinearSetup":
        dio = dioph_appr(ExactRational(-x, mc * nc * nc), 2 * b)
        return cls(x, mc, nc, a, b, dio.a0, dio.a0_inv, dio.q,
                   -x * dio.q - dio.a0 * mc * nc * nc)

    @property
    def sign_delta(self) -> int:
        return sgn(self.delta_num)

    def context(self, m: int) -> CorrectionContext:
        mc, nc, q = self.mc, self.nc, self.q
        D1 = mc * mc * nc
        N = self.x * (mc - m)
        F = N // D1
        fr = N - F * D1
        # nearest r/q to {R0}, ties to the larger r
        r0 = (2 * fr * q + D1) // (2 * D1)
        beta_num = fr * q - r0 * D1
        if self.delta_num:
            Q = ExactRational(beta_num * nc, mc * self.delta_num)
        else:
            Q = ExactRational(0, 1)
        return CorrectionContext(m, mc + m, ExactRational(N, D1), r0,
                                 ExactRational(beta_num, q * D1), Q,
                                 sgn(beta_num), self.sign_delta)


def _floor_of(R0) -> int:
    return R0.floor() if isinstance(R0, ExactRational) else int(R0)


# ---------------------------------------------------------------------------
# correction intervals (shared by the table sums and the pointwise predictor)


def _J(sign_beta: int, sign_delta: int, Q: ExactRational) -> IntInterval:
    if sign_delta > 0:
        return IntInterval.at_most(-Q.floor() - 1)
    if sign_delta < 0:
        return IntInterval.at_least(-Q.ceil() + 1)
    return ALL if sign_beta < 0 else EMPTY


def interval_special1(x, q, a0, R0, r0, n_c, m_abs) -> IntInterval:
    """Offsets n of the class where L2 = L1 (the fail set of L2 > L1)."""
    g1 = (-_floor_of(R0) * q - (r0 + 1) + a0 * n_c) * m_abs
    return quad_ineq_z(-a0 * m_abs, g1, x * q).shift(-n_c)


def interval_special0b(x, q, a0, R0, r0, n_c, m_abs) -> IntInterval:
    g1 = (-_floor_of(R0) * q - r0 + a0 * n_c) * m_abs
    return quad_ineq_z(-a0 * m_abs, g1, x * q).shift(-n_c)


def intervals_special0a(q, r0, Q, sign_beta, sign_delta) -> List[IntInterval]:
    """Disjoint intervals of offsets in the class a0 n = -r0 where L1 - L0 = 1."""
    if 0 < r0 < q:
        if sign_delta > 0:
            return [IntInterval.at_least(-Q.floor())]
        if sign_delta < 0:
            return [IntInterval.at_most(-Q.ceil())]
        return [ALL] if sign_beta >= 0 else []
    if sign_delta == 0 or sign_beta == 0:
        return []
    if sign_beta < 0:
        if sign_delta < 0:
            return [IntInterval.at_most(-Q.ceil()), IntInterval.at_least(1)]
        return [IntInterval.at_most(-1), IntInterval.at_least(-Q.floor())]
    if sign_delta > 0:
        return [IntInterval.closed(-Q.floor(), -1)]
    return [IntInterval.closed(1, -Q.ceil())]


def intervals_special00(x, a0, R0, r0, n_c, m_abs, Q, sign_beta, sign_delta):
    """(I0, I1, J) for q = 1; L2 = L1 exactly on (I0 & J) | (I1 & ~J)."""
    J = _J(sign_beta, sign_delta, Q)
    F = _floor_of(R0)
    Is = []
    for j in (0, 1):
        if a0 != 0:
            g1 = (-F - (r0 + j) + a0 * n_c) * m_abs
            Is.append(quad_ineq_z(-a0 * m_abs, g1, x).shift(-n_c))
        else:
            K = F + r0 + j
            Is.append(IntInterval.at_least(x // (m_abs * K) + 1 - n_c) if K > 0 else EMPTY)
    return Is[0], Is[1], J


# ---------------------------------------------------------------------------
# the correction sums


def special1(tables, x, q, a0, a0_inv, R0, r0, n_c, m, b) -> int:
    """Sum of g (L2 - L1) over the class a0 n = -1 - r0 (q > 1)."""
    r = ((-1 - r0) * a0_inv) % q
    I = interval_special1(x, q, a0, R0, r0, n_c, m)
    return sum_inter(tables, r, ALL, b, q) - sum_inter(tables, r, I, b, q)


def special0a(tables, q, a0, a0_inv, r0, b, Q_ratio, sign_beta, sign_delta) -> int:
    """Sum of g (L1 - L0) over the class a0 n = -r0."""
    r = (-r0 * a0_inv) % q
    return sum(sum_inter(tables, r, I, b, q)
               for I in intervals_special0a(q, r0, Q_ratio, sign_beta, sign_delta))


def special0b(tables, x, q, a0, a0_inv, R0, r0, n_c, m, b, Q_ratio, sign_beta,
              sign_delta) -> int:
    """Sum of g (L2 - L1) over the class a0 n = -r0 (q > 1)."""
    r = (-r0 * a0_inv) % q
    I = interval_special0b(x, q, a0, R0, r0, n_c, m)
    J = _J(sign_beta, sign_delta, Q_ratio)
    return sum_inter(tables, r, J, b, q) - sum_inter(tables, r, I & J, b, q)


def special00(tables, x, q, a0, a0_inv, R0, r0, n_c, m, b, Q_ratio, sign_delta,
              sign_beta: Optional[int] = None) -> int:
    """Sum of g (L2 - L1) over all n when q = 1.

    ``sign_beta`` decides J when delta = 0; it is derived from R0 and r0 when
    not given.
    """
    if q != 1:
        raise DomainError("special00 needs q = 1")
    if sign_beta is None:
        R0 = ExactRational.of(R0)
        sign_beta = (R0.frac() - r0).sign
    I0, I1, J = intervals_special00(x, a0, R0, r0, n_c, m, Q_ratio, sign_beta, sign_delta)
    S = sum_inter(tables, 0, I0 & J, b, 1)
    S += sum_inter(tables, 0, I1 & J.complement_ray(), b, 1)
    return sum_inter(tables, 0, ALL, b, 1) - S


def linear_sum(f, g, a: int, b: int, alpha0, alpha1, alpha2) -> int:
    """Sum of f(m) g(n) (floor(alpha0 + alpha1 m) + floor(alpha2 n)) over [-a,a) x [-b,b)."""
    al0, al1, al2 = (ExactRational.of(t) for t in (alpha0, alpha1, alpha2))
    n0, d01 = al0.num * al1.den, al0.den * al1.den
    n1 = al1.num * al0.den
    S1 = S10 = 0
    for i in range(2 * a):
        w = int(f[i])
        if w:
            S1 += w * ((n0 + n1 * (i - a)) // d01)
            S10 += w
    S2 = S20 = 0
    for j in range(2 * b):
        w = int(g[j])
        if w:
            S2 += w * ((al2.num * (j - b)) // al2.den)
            S20 += w
    return S1 * S20 + S10 * S2


def correction_for_m(setup: LinearSetup, tables: CongruenceTables, Z: int,
                     ctx: CorrectionContext) -> int:
    """Sum over n of g(n) (L2 - L0) at the offset ctx.m."""
    x, q, a0, ai, b, nc = setup.x, setup.q, setup.a0, setup.a0_inv, setup.b, setup.nc
    r0 = ctx.r0
    T = tables.sigma[r0]
    T += special0a(tables, q, a0, ai, r0, b, ctx.Q_ratio, ctx.sign_beta, ctx.sign_delta)
    if q > 1:
        T += special1(tables, x, q, a0, ai, ctx.R0, r0, nc, ctx.m_abs, b)
        T += special0b(tables, x, q, a0, ai, ctx.R0, r0, nc, ctx.m_abs, b,
                       ctx.Q_ratio, ctx.sign_beta, ctx.sign_delta)
    else:
        T += special00(tables, x, q, a0, ai, ctx.R0, r0, nc, ctx.m_abs, b,
                       ctx.Q_ratio, ctx.sign_delta, ctx.sign_beta)
    if 0 < r0 < q:
        T += Z
    return T


def point_correction(setup: LinearSetup, ctx: CorrectionContext, n: int) -> int:
    """Predicted L2 - L0 at offsets (ctx.m, n), read off the correction intervals.

    Mirrors correction_for_m term by term for a single n, in O(1).
    """
    q, r0 = setup.q, ctx.r0
    c = (setup.a0 * n) % q
    out = 0
    if q - r0 + 1 <= c <= q - 1:
        out += 1
    if 0 < r0 < q and n != 0 and n % q == 0 and (n > 0) == (ctx.sign_delta < 0) \
            and ctx.sign_delta != 0:
        out += 1
    if c == (-r0) % q:
        out += any(n in I for I in intervals_special0a(q, r0, ctx.Q_ratio,
                                                         ctx.sign_beta, ctx.sign_delta))
    if q > 1:
        if c == (-1 - r0) % q:
            out += n not in interval_special1(setup.x, q, setup.a0, ctx.R0, r0,
                                              setup.nc, ctx.m_abs)
        if c == (-r0) % q:
            I = interval_special0b(setup.x, q, setup.a0, ctx.R0, r0, setup.nc, ctx.m_abs)
            J = _J(ctx.sign_beta, ctx.sign_delta, ctx.Q_ratio)
            out += (n in J) and (n not in I)
    else:
        I0, I1, J = intervals_special00(setup.x, setup.a0, ctx.R0, r0, setup.nc,
                                        ctx.m_abs, ctx.Q_ratio, ctx.sign_beta,
                                        ctx.sign_delta)
        out += 1 - ((n in I0 and n in J) or (n in I1 and n not in J))
    return out


def _in(I: IntInterval, n: np.ndarray) -> np.ndarray:
    if I.empty:
        return np.zeros(len(n), dtype=bool)
    lim = int(np.abs(n).max()) + 1 if len(n) else 1
    lo = -lim if I.lo is None else max(min(I.lo, lim), -lim)
    hi = lim if I.hi is None else max(min(I.hi, lim), -lim)
    return (n >= lo) & (n <= hi)


def row_corrections(setup: LinearSetup, ctx: CorrectionContext) -> np.ndarray:
    """point_correction for every n in [-b, b) at once (index n + b)."""
    q, r0, b = setup.q, ctx.r0, setup.b
    n = np.arange(-b, b, dtype=np.int64)
    c = (setup.a0 % q * n) % q
    out = ((c >= q - r0 + 1) & (c <= q - 1)).astype(np.int64)
    if 0 < r0 < q and ctx.sign_delta != 0:
        out += (n != 0) & (n % q == 0) & ((n > 0) == (ctx.sign_delta < 0))
    cls0 = c == (-r0) % q
    hit = np.zeros(len(n), dtype=bool)
    for I in intervals_special0a(q, r0, ctx.Q_ratio, ctx.sign_beta, ctx.sign_delta):
        hit |= _in(I, n)
    out += cls0 & hit
    if q > 1:
        I1 = interval_special1(setup.x, q, setup.a0, ctx.R0, r0, setup.nc, ctx.m_abs)
        out += (c == (-1 - r0) % q) & ~_in(I1, n)
        Ib = interval_special0b(setup.x, q, setup.a0, ctx.R0, r0, setup.nc, ctx.m_abs)
        J = _J(ctx.sign_beta, ctx.sign_delta, ctx.Q_ratio)
        out += cls0 & _in(J, n) & ~_in(Ib, n)
    else:
        I0, I1, J = intervals_special00(setup.x, setup.a0, ctx.R0, r0, setup.nc,
                                        ctx.m_abs, ctx.Q_ratio, ctx.sign_beta,
                                        ctx.sign_delta)
        inJ = _in(J, n)
        out += 1 - ((_in(I0, n) & inJ) | (_in(I1, n) & ~inJ))
    return out


def sum_by_lin(f, g, x: int, mc: int, nc: int, a: int, b: int) -> int:
    """Sum of f(m) g(n) floor(x/((mc+m)(nc+n))) over [-a,a) x [-b,b), exactly.

    f and g are indexed from the left edge: f[i] is the weight of m = i - a.
    The caller guarantees the neighborhood passes neighborhood_valid.
    """
    if mc - a < 1 or nc - b < 1:
        raise DomainError("neighborhood must lie in the positive quadrant")
    setup = LinearSetup.build(x, mc, nc, a, b)
    lm = LinearModel.at(x, mc, nc)
    S = linear_sum(f, g, a, b, lm.alpha0, lm.alpha1, lm.alpha2)
    if not any(int(t) for t in g):
        return S
    tables = sum_table(g, b, setup.a0, setup.q)
    Z = ray_sum(g, setup.q, b, setup.sign_delta)
    for i in range(2 * a):
        w = int(f[i])
        if w:
            S += w * correction_for_m(setup, tables, Z, setup.context(i - a))
    return S


# ---------------------------------------------------------------------------
# rectangles


def brute_double_sum(m0, m1, n0, n1, f, g, F) -> int:
    """Sum of f[m-m0] g[n-n0] F(m, n) over [m0, m1) x [n0, n1)."""
    S = 0
    for m in range(m0, m1):
        w = int(f[m - m0])
        if w:
            S += w * sum(int(g[n - n0]) * F(m, n) for n in range(n0, n1))
    return S


def double_sum(m0, m1, n0, n1, a, b, f, g, x, backend=None) -> int:
    """Sum of f[m-m0] g[n-n0] floor(x/mn) over [m0, m1) x [n0, n1) by neighborhoods.

    Tiles of size 2a x 2b start at m0, n0; the last tile on each axis is
    padded with zero weights.
    """
    if m0 < 1 or n0 < 1 or m1 > 2 * m0 or n1 > 2 * n0:
        raise DomainError("double_sum needs m0, n0 >= 1, m1 <= 2 m0, n1 <= 2 n0")
    if (m1 - m0) % 2 or (n1 - n0) % 2:
        raise DomainError("double_sum needs even widths")
    if m1 <= m0 or n1 <= n0:
        return 0
    if not neighborhood_valid(x, m0 + a, n0 + b, a, b):
        raise DomainError(f"half-widths a={a}, b={b} too large at ({m0}, {n0})")
    kern = _backend.for_x(x, backend)
    return kern.double_sum(m0, m1, n0, n1, a, b,
                           np.ascontiguousarray(f[:m1 - m0], dtype=np.int8),
                           np.ascontiguousarray(g[:n1 - n0], dtype=np.int8), x)


def dd_sum(A, A2, B, B2, x, delta, gamma, a=0, b=0, *, threads=1, primes=None,
           backend=None, pool=None) -> int:
    """Sum of mu(m) mu(n) floor(x/mn) over [A, A2) x [B, B2).

    mu is sieved in windows of length delta along each axis; each
    (m-window, n-window) pair is an independent task that sieves its own
    windows.  gamma = 1 uses neighborhoods, gamma = 0 the direct loop.
    """
    if A < 1 or B < 1:
        raise DomainError("dd_sum needs A, B >= 1")
    if delta < 1:
        raise DomainError("dd_sum needs delta >= 1")
    if gamma == 1 and (delta % 2 or (A2 - A) % 2 or (B2 - B) % 2):
        raise DomainError("dd_sum with gamma = 1 needs even delta and even widths")
    if A2 <= A or B2 <= B:
        return 0
    kern = _backend.for_x(x, backend)
    if primes is None:
        primes = primes_upto(isqrt(max(A2, B2) + delta))
    tasks = [(m0, n0) for m0 in range(A, A2, delta) for n0 in range(B, B2, delta)]

    def work(t):
        m0, n0 = t
        m1, n1 = min(m0 + delta, A2), min(n0 + delta, B2)
        f = kern.mu_window(m0, m1 - m0 - 1, primes)
        g = kern.mu_window(n0, n1 - n0 - 1, primes)
        if gamma == 1:
            return double_sum(m0, m1, n0, n1, a, b, f, g, x, backend=kern)
        return kern.brute_block(x, m0, n0, f, g)

    if threads <= 1 or len(tasks) == 1:
        return sum(work(t) for t in tasks)
    if pool is not None:
        return sum(pool.map(work, tasks))
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return sum(ex.map(work, tasks))


def _ceil_sqrt(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


def large_free(x: int, v: int, *, C: int = 10, D: int = 8, threads: int = 1,
               backend=None) -> int:
    """Sum of mu(m) mu(n) floor(x/mn) over 1 <= m, n <= v.

    Boxes [A, A') x [B, B') shrink by a factor about 1 - 1/D; a box goes to
    the neighborhood method while its sides stay above the cutoffs
    2 (6 C^3 x)^(1/4) and 2 (6 C^3 x / A)^(1/3), otherwise to the direct loop.
    Off-diagonal boxes are counted twice by symmetry.
    """
    if v < 1:
        raise DomainError("large_free needs v >= 1")
    if C < 1 or D < 1:
        raise DomainError("C and D must be positive")
    sv = _ceil_sqrt(v)
    C3x = C ** 3 * x
    primes = primes_upto(isqrt(v + 1 + 2 * (v + 1)))
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    kw = dict(threads=threads, primes=primes, backend=backend, pool=pool)
    S = 0
    Ap = v + 1
    try:
        while Ap ** 4 >= 96 * C3x and Ap >= sv and Ap >= 2 * D:
            A = Ap - 2 * (Ap // (2 * D))
            Bp = Ap
            while Bp ** 3 * A >= 48 * C3x and Bp >= sv and Bp >= 2 * D:
                B = Bp - 2 * (Bp // (2 * D))
                a, b = neighborhood_sizes(x, A, B)
                w = 2 * max(a, b)
                delta = -(-sv // w) * w
                S += (1 if A == B else 2) * dd_sum(A, Ap, B, Bp, x, delta, 1, a, b, **kw)
                Bp = B
            if Bp == Ap:
                # the diagonal box itself was too small for neighborhoods
                S += dd_sum(A, Ap, A, Ap, x, sv, 0, **kw)
                Bp = A
            S += 2 * dd_sum(A, Ap, 1, Bp, x, sv, 0, **kw)
            Ap = A
        S += dd_sum(1, Ap, 1, Ap, x, sv, 0, **kw)
    finally:
        if pool is not None:
            pool.shutdown()
    return S


def large_free_oracle(x: int, v: int) -> int:
    """Direct double loop over [1, v]^2."""
    from .sieve import seg_mu
    mu = seg_mu(1, v - 1).mu
    return _backend.get("python").brute_block(x, 1, 1, mu, mu)
