import math
import random

import numpy as np
import pytest

from conftest import mu_trial
from mertens.sieve import (PackedFactors, pack_factors, primes_upto, seg_factor, seg_mu,
                           seg_primes, simple_sieve, sub_seg_sieve_fac, unpack_factors)

N = 10 ** 5
MU = np.array([mu_trial(n) for n in range(1, N + 1)], dtype=np.int8)


def test_simple_sieve():
    assert primes_upto(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_upto(1).tolist() == [] and primes_upto(2).tolist() == [2]
    flags = simple_sieve(100).flags
    assert flags.sum() == 25


def test_seg_primes():
    assert seg_primes(1, 9).primes().tolist() == [2, 3, 5, 7]
    assert seg_primes(90, 20).primes().tolist() == [97, 101, 103, 107, 109]


@pytest.mark.parametrize("wheel", [False, True])
@pytest.mark.parametrize("log4", [False, True])
def test_seg_mu_full_range(wheel, log4):
    assert np.array_equal(seg_mu(1, N - 1, wheel=wheel, log4=log4).mu, MU)


@pytest.mark.parametrize("wheel", [False, True])
@pytest.mark.parametrize("log4", [False, True])
def test_seg_mu_windows(wheel, log4):
    rng = random.Random(5)
    for _ in range(60):
        n0 = rng.randint(1, N - 500)
        d = rng.randint(0, 400)
        seg = seg_mu(n0, d, wheel=wheel, log4=log4)
        assert np.array_equal(seg.mu, MU[n0 - 1:n0 + d])
        assert seg[n0] == MU[n0 - 1] and len(seg) == d + 1


def test_seg_mu_large_windows():
    rng = random.Random(6)
    for n0 in [10 ** 10, 2 ** 33 + 7] + [rng.randint(10 ** 9, 10 ** 10) for _ in range(2)]:
        ref = [mu_trial(n) for n in range(n0, n0 + 100)]
        for wheel in (False, True):
            for log4 in (False, True):
                assert seg_mu(n0, 99, wheel=wheel, log4=log4).mu.tolist() == ref


def test_seg_mu_rejects_zero():
    with pytest.raises(ValueError):
        seg_mu(0, 5)


def test_seg_factor_products():
    rng = random.Random(7)
    for n in [2, 10 ** 9 - 1000] + [rng.randint(2, 10 ** 9 - 1000) for _ in range(20)]:
        d = rng.randint(0, 999)
        seg = seg_factor(n, d)
        for j, F in enumerate(seg.factors):
            ps = [p for p, _ in F]
            assert ps == sorted(set(ps))
            assert all(all(p % s for s in range(2, math.isqrt(p) + 1)) for p in ps[:3])
            assert math.prod(p ** e for p, e in F) == n + j


def test_sub_seg_sieve_partial():
    seg, Pi = sub_seg_sieve_fac(100, 10, 5)
    assert seg[100] == [(2, 2), (5, 2)] and Pi[0] == 100
    assert seg[101] == [] and Pi[1] == 1
    assert seg[102] == [(2, 1), (3, 1)] and Pi[2] == 6
    with pytest.raises(ValueError):
        sub_seg_sieve_fac(0, 3, 5)
    with pytest.raises(ValueError):
        seg_factor(1, 3)


def test_pack_worked_example():
    packed = pack_factors([2, 3, 5, 7])
    assert str(packed) == "(111010, 010111)"
    assert unpack_factors(packed) == [2, 3, 5, 7]
    assert unpack_factors(packed, descending=True) == [7, 5, 3, 2]


def test_pack_round_trip_all():
    seg = seg_factor(2, N - 2)
    for F in seg.factors:
        ps = [p for p, _ in F]
        packed = pack_factors(ps)
        assert packed.nbits == sum(p.bit_length() - 1 for p in ps)
        assert unpack_factors(packed) == ps
        assert unpack_factors(packed, descending=True) == ps[::-1]


def test_pack_errors_and_empty():
    assert str(pack_factors([])) == "(, )" and unpack_factors(PackedFactors(0, 0, 0)) == []
    with pytest.raises(ValueError):
        pack_factors([3, 2])


def test_small_examples():
    assert seg_mu(1, 9).mu.tolist() == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert seg_mu(4, 0).mu.tolist() == [0] and seg_mu(1, 0).mu.tolist() == [1]
    assert seg_primes(0, 1).primes().tolist() == [] and seg_primes(2, 0).primes().tolist() == [2]
    assert seg_primes(90, 10).primes().tolist() == [97]
    seg, Pi = sub_seg_sieve_fac(12, 0, 3)
    assert seg[12] == [(2, 2), (3, 1)] and Pi == [12]
    seg, Pi = sub_seg_sieve_fac(7, 0, 2)
    assert seg[7] == [] and Pi == [1]
    seg, Pi = sub_seg_sieve_fac(8, 1, 2)
    assert seg.factors == [[(2, 3)], []] and Pi == [8, 1]
    assert seg_factor(210, 0)[210] == [(2, 1), (3, 1), (5, 1), (7, 1)]
    assert seg_factor(97, 0)[97] == [(97, 1)] and seg_factor(100, 0)[100] == [(2, 2), (5, 2)]
    p = pack_factors([2])
    assert (p.a_bits, p.b_bits, p.nbits) == (1, 0, 1)
