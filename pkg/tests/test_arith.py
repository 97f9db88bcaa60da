import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mertens.arith import (ALL, EMPTY, DomainError, ExactRational, IntInterval, ceil_div,
                           dioph_appr, discriminant_bound_log2, flcong, floor_div, iroot,
                           isqrt, mod_nonneg, overflow_bound_log2, overflow_guard,
                           quad_ineq_z)
from mertens.driver import choose_v


@given(st.integers(min_value=0, max_value=2 ** 126 - 1))
def test_isqrt_matches_math(n):
    assert isqrt(n) == math.isqrt(n)


def test_isqrt_edges():
    for k in range(1, 63):
        for n in (k * k - 1, k * k, k * k + 1, (1 << k) ** 2 - 1):
            assert isqrt(n) == math.isqrt(n)
    assert isqrt(2 ** 126 - 1) == 2 ** 63 - 1
    with pytest.raises(OverflowError):
        isqrt(2 ** 126)
    with pytest.raises(OverflowError):
        isqrt(-1)


@given(st.integers(min_value=0, max_value=10 ** 40), st.integers(min_value=1, max_value=7))
def test_iroot(n, k):
    r = iroot(n, k)
    assert r ** k <= n < (r + 1) ** k


def test_mod_and_floors():
    assert mod_nonneg(-7, 3) == 2
    with pytest.raises(DomainError):
        mod_nonneg(1, 0)
    assert flcong(10, 2, 4) == 10 and flcong(9, 2, 4) == 6 and flcong(-3, 0, 5) == -5
    for num in range(-20, 21):
        for den in (-7, -3, -1, 1, 2, 5):
            assert floor_div(num, den) == math.floor(Fraction(num, den))
            assert ceil_div(num, den) == math.ceil(Fraction(num, den))


def test_exact_rational():
    r = ExactRational(6, -4)
    assert (r.num, r.den) == (-6, 4)
    assert r.floor() == -2 and r.ceil() == -1 and r.sign == -1
    assert r == Fraction(-3, 2) and r.to_fraction() == Fraction(-3, 2)
    assert r.frac() == Fraction(1, 2)
    assert ExactRational(1, 3) + ExactRational(1, 6) == Fraction(1, 2)
    assert ExactRational(1, 3) * 3 == 1
    assert ExactRational(1, 3) < ExactRational(1, 2) <= Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        ExactRational(1, 0)


def test_int_interval():
    assert IntInterval(3, 2).empty and IntInterval(3, 2) == EMPTY
    assert 5 in IntInterval.at_least(5) and 4 not in IntInterval.at_least(5)
    assert 10 ** 30 in ALL and 0 not in EMPTY
    assert IntInterval.closed(1, 5) & IntInterval.at_least(3) == IntInterval(3, 5)
    assert IntInterval.at_most(2).complement_ray() == IntInterval.at_least(3)
    assert EMPTY.complement_ray() == ALL and ALL.complement_ray() == EMPTY
    assert IntInterval.closed(1, 2).shift(3) == IntInterval(4, 5)
    with pytest.raises(DomainError):
        IntInterval.closed(1, 2).complement_ray()
    assert [I.kind for I in (EMPTY, ALL, IntInterval.at_most(0),
                             IntInterval.at_least(0), IntInterval(0, 0))] == \
        ["empty", "all", "left-infinite", "right-infinite", "bounded"]


def _quad_brute(a, b, c, lo=-300, hi=300):
    if a < 0:
        return [n for n in range(lo, hi + 1) if a * n * n + b * n + c >= 0]
    return [n for n in range(lo, hi + 1) if a * n * n + b * n + c < 0]


def test_quad_ineq_examples():
    assert quad_ineq_z(-1, 0, 4) == IntInterval(-2, 2)
    assert quad_ineq_z(1, 0, -4) == IntInterval(-1, 1)
    assert quad_ineq_z(1, 0, 1) == EMPTY
    assert quad_ineq_z(-1, 0, -1) == EMPTY
    with pytest.raises(DomainError):
        quad_ineq_z(0, 1, 1)


def test_quad_ineq_brute():
    rng = random.Random(1)
    for _ in range(3000):
        a = rng.choice([-1, 1]) * rng.randint(1, 6)
        r1, r2 = rng.randint(-20, 20), rng.randint(-20, 20)
        if rng.random() < 0.5:
            # integer roots: exercises the perfect-square branches
            b, c = -a * (r1 + r2), a * r1 * r2
        else:
            b, c = rng.randint(-80, 80), rng.randint(-200, 200)
        got = quad_ineq_z(a, b, c)
        sol = _quad_brute(a, b, c)
        if not sol:
            assert got.empty
        else:
            assert sol == list(range(sol[0], sol[-1] + 1))
            assert (got.lo, got.hi) == (sol[0], sol[-1])


def _check_dioph(alpha, Q):
    d = dioph_appr(alpha, Q)
    fa = Fraction(alpha.num, alpha.den) if isinstance(alpha, ExactRational) else Fraction(alpha)
    assert 1 <= d.q <= Q
    assert math.gcd(d.a0, d.q) == 1
    err = fa - Fraction(d.a0, d.q)
    assert abs(err) <= Fraction(1, d.q * Q)
    assert (d.a0 * d.a0_inv - 1) % d.q == 0
    assert d.s == (err > 0) - (err < 0)


def test_dioph_example():
    d = dioph_appr(Fraction(-5, 7), 4)
    assert (d.a0, d.q, d.s) == (-2, 3, -1)
    assert (d.a0 * 7 - 1) % 3 == 0 and d.a0_inv % 3 == 7 % 3
    _check_dioph(Fraction(-5, 7), 4)


@settings(max_examples=300)
@given(st.integers(-10 ** 18, 10 ** 18), st.integers(1, 10 ** 15), st.integers(1, 10 ** 6))
def test_dioph_property(num, den, Q):
    _check_dioph(ExactRational(num, den), Q)


def test_dioph_exact_hit():
    d = dioph_appr(Fraction(3, 8), 100)
    assert (d.a0, d.q, d.s) == (3, 8, 0)
    with pytest.raises(DomainError):
        dioph_appr(1, 0)


def test_overflow_guard_values():
    for x, c, want in ((10 ** 23, 9 / 8, 126.611), (2 ** 75, 3 / 2, 126.361)):
        v = choose_v(x, c)
        assert abs(overflow_bound_log2(x, v) - want) < 0.05
        assert overflow_guard(x, v)
    assert not overflow_guard(10 ** 23, choose_v(10 ** 23, 3.0))
    with pytest.raises(DomainError):
        overflow_guard(0, 1)
    assert discriminant_bound_log2(2 ** 75, 1.5) < 127


def test_overflow_guard_exact_boundary():
    # 8 v^16 < 6x 2^381 decided without rounding
    x = 8 * 2 ** 16 // 6 + 1
    assert overflow_guard(x, 2, b_max=0) == (8 * 2 ** 16 < 6 * x)


def test_small_examples():
    assert isqrt(0) == 0 and isqrt(2 ** 100) == 2 ** 50 and isqrt(15) == 3
    assert (mod_nonneg(7, 3), mod_nonneg(-1, 5), mod_nonneg(0, 1)) == (1, 4, 0)
    assert (flcong(10, 3, 7), flcong(9, 3, 7), flcong(-1, 0, 5)) == (10, 3, -5)
    from mertens.arith import sgn
    assert (sgn(ExactRational(-3, 7)), sgn(0), sgn(5)) == (-1, 0, 1)
    d = dioph_appr(5, 100)
    assert (d.a0, d.q, d.s) == (5, 1, 0)
    d = dioph_appr(Fraction(1, 3), 3)
    assert (d.a0, d.q, d.s) == (1, 3, 0)
    assert overflow_guard(10 ** 6, 10 ** 3)
