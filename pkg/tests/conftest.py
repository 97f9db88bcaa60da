import math

import numpy as np
import pytest

from mertens import _backend
from mertens.free import LinearModel, neighborhood_sizes, neighborhood_valid

BACKENDS = _backend.available()


@pytest.fixture(params=["c", "python"])
def backend(request):
    if request.param not in BACKENDS:
        pytest.skip("compiled kernels not built")
    return _backend.get(request.param)


def mu_trial(n: int) -> int:
    """mu(n) by trial division."""
    if n == 1:
        return 1
    k, p = 0, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            k += 1
        p += 1
    if n > 1:
        k += 1
    return -1 if k % 2 else 1


def mertens_trial(x: int) -> int:
    return sum(mu_trial(n) for n in range(1, x + 1))


def random_weights(rng, k):
    return np.array([rng.choice((-1, 0, 1)) for _ in range(k)], dtype=np.int8)


def random_neighborhood(rng, xmax=10 ** 12, side=3000):
    """(x, mc, nc, a, b) with a, b drawn at or below the sizing rule."""
    while True:
        x = rng.randint(10 ** 3, xmax)
        A, B = rng.randint(2, side), rng.randint(2, side)
        a, b = neighborhood_sizes(x, A, B)
        if a >= 1 and b >= 1:
            a, b = rng.randint(1, a), rng.randint(1, b)
            return x, A + a, B + b, a, b


def delta_zero_neighborhood(rng):
    """A valid neighborhood whose slope x/(mc nc^2) is exactly a rational p/q with q <= 2b."""
    while True:
        b, a = rng.randint(1, 12), rng.randint(1, 12)
        q = rng.randint(1, 2 * b)
        p = rng.randint(1, 3 * q)
        if math.gcd(p, q) != 1:
            continue
        nc = rng.randint(b + 1, 400)
        mc = rng.randint(a + 1, 20000)
        if (p * mc * nc * nc) % q:
            mc2 = mc * q // math.gcd(mc * nc * nc, q)
            if mc2 > a:
                mc = mc2
            if (p * mc * nc * nc) % q:
                continue
        x = p * mc * nc * nc // q
        if neighborhood_valid(x, mc, nc, a, b):
            return x, mc, nc, a, b


def small_slope_neighborhood(rng):
    """A valid neighborhood with slope below 1/(2b+1), so a0 = 0 and q = 1."""
    while True:
        a, b = rng.randint(1, 6), rng.randint(1, 30)
        mc, nc = rng.randint(a + 1, 3000), rng.randint(b + 1, 30000)
        A, B = mc - a, nc - b
        xmax = min(A ** 3 * B // (6 * a * a * b), A * B ** 3 // (6 * b ** 3),
                   mc * nc * nc // (2 * b + 1))
        if xmax >= 1:
            return rng.randint(1, xmax), mc, nc, a, b


def exact_rows(x, mc, nc, a, b):
    """floor(x/mn) - L0 on the whole neighborhood, as a (2a, 2b) int64 array."""
    lm = LinearModel.at(x, mc, nc)
    n = np.arange(-b, b, dtype=object)
    an = np.array([(lm.alpha2 * int(t)).floor() for t in n], dtype=object)
    rows = []
    for m in range(-a, a):
        R0 = (lm.alpha0 + lm.alpha1 * m).floor()
        L2 = np.array([x // ((mc + m) * (nc + int(t))) for t in n], dtype=object)
        rows.append((L2 - R0 - an).astype(np.int64))
    return np.array(rows)


#: criterion number -> (status, detail); filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {status:4s}  {detail}")
