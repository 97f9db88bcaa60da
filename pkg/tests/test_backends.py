import random

import numpy as np
import pytest

from conftest import BACKENDS, random_neighborhood, random_weights
from mertens import _backend
from mertens.sieve import primes_upto

pytestmark = pytest.mark.skipif("c" not in BACKENDS, reason="compiled kernels not built")


@pytest.fixture(scope="module")
def kernels():
    return _backend.get("c"), _backend.get("python")


def test_selection(monkeypatch):
    assert _backend.get("python").NAME == "python"
    assert _backend.get("c").NAME == "c"
    monkeypatch.setenv("MERTENS_BACKEND", "python")
    assert _backend.get().NAME == "python"
    monkeypatch.delenv("MERTENS_BACKEND")
    assert _backend.get().NAME == "c"
    assert _backend.for_x(_backend.C_MAX_X, "c").NAME == "python"
    assert _backend.name_of(_backend.get("c")) == "c"
    with pytest.raises(ValueError):
        _backend.get("fortran")


def test_mu_window(kernels):
    c, py = kernels
    rng = random.Random(1)
    for n0 in [1, 2, 48, 1259, 10 ** 6] + [rng.randint(1, 10 ** 11) for _ in range(20)]:
        d = rng.randint(0, 3000)
        P = primes_upto(int((n0 + d) ** 0.5) + 1)
        assert np.array_equal(c.mu_window(n0, d, P), py.mu_window(n0, d, P))


def test_mu_window_large(kernels):
    c, py = kernels
    P = primes_upto(2 ** 21)
    for n0 in (2 ** 40, 10 ** 12 + 7, 4 * 10 ** 12 - 500):
        assert np.array_equal(c.mu_window(n0, 999, P), py.mu_window(n0, 999, P))


def test_mertens_range(kernels):
    c, py = kernels
    P = primes_upto(2000)
    for lo, hi in ((1, 10 ** 6), (12345, 3 * 10 ** 6), (7, 7), (10, 9)):
        assert c.mertens_range(lo, hi, P) == py.mertens_range(lo, hi, P)


def test_d_values(kernels):
    c, py = kernels
    rng = random.Random(2)
    for _ in range(20):
        x = rng.randint(10 ** 3, 2 ** 61)
        r0 = rng.randint(1, 10 ** 6)
        d = rng.randint(0, 500)
        P = primes_upto(int((r0 + d) ** 0.5) + 1)
        assert np.array_equal(c.d_values(x, r0, d, P), py.d_values(x, r0, d, P))


def test_brute_block(kernels):
    c, py = kernels
    rng = random.Random(3)
    for x in (10 ** 6, 10 ** 12, 2 ** 55, 2 ** 61):
        m0, n0 = rng.randint(1, 5000), rng.randint(1, 5000)
        f, g = random_weights(rng, 300), random_weights(rng, 257)
        assert c.brute_block(x, m0, n0, f, g) == py.brute_block(x, m0, n0, f, g)
    assert c.brute_block(100, 1, 1, [], [1]) == 0


def test_nonfree_scan(kernels):
    c, py = kernels
    x, v = 10 ** 8, 300
    u = 10 ** 4
    mu = c.mu_window(u - 500, 500, primes_upto(200))
    r0 = x // u
    S = np.cumsum(c.d_values(x, r0, 2000, primes_upto(200)))
    args = (x, u, v, mu, u - 500, S, r0, 5, -7)
    assert c.nonfree_scan(*args) == py.nonfree_scan(*args)


def test_sum_by_lin(kernels):
    c, py = kernels
    rng = random.Random(4)
    for _ in range(400):
        x, mc, nc, a, b = random_neighborhood(rng, xmax=2 ** 61, side=2 ** 15)
        f, g = random_weights(rng, 2 * a), random_weights(rng, 2 * b)
        assert c.sum_by_lin(f, g, x, mc, nc, a, b) == py.sum_by_lin(f, g, x, mc, nc, a, b)


def test_double_sum(kernels):
    c, py = kernels
    rng = random.Random(5)
    from mertens.free import neighborhood_sizes
    for _ in range(30):
        x = rng.randint(10 ** 8, 10 ** 15)
        m0, n0 = rng.randint(1000, 20000), rng.randint(1000, 20000)
        a, b = neighborhood_sizes(x, m0, n0)
        if a < 1 or b < 1:
            continue
        m1, n1 = m0 + 2 * rng.randint(1, 100), n0 + 2 * rng.randint(1, 100)
        f, g = random_weights(rng, m1 - m0), random_weights(rng, n1 - n0)
        assert c.double_sum(m0, m1, n0, n1, a, b, f, g, x) == \
            py.double_sum(m0, m1, n0, n1, a, b, f, g, x)
