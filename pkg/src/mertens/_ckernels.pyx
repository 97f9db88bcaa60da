# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same call signatures as mertens._pykernels."""

import numpy as np

from libc.stdint cimport int8_t, uint8_t, int64_t, uint64_t

cdef extern from "_kernels.h" nogil:
    ctypedef struct i128:
        pass
    void split128(i128 v, int64_t *hi, uint64_t *lo)
    i128 join128(int64_t hi, uint64_t lo)
    void k_mu_window(int64_t n0, int64_t delta, const int64_t *primes, int64_t nprimes,
                     int8_t *mu, uint8_t *lg)
    int64_t k_mertens_range(int64_t n0, int64_t n1, const int64_t *primes, int64_t nprimes)
    void k_d_values(int64_t x, int64_t r0, int64_t delta, const int64_t *primes, int64_t nprimes,
                    int64_t *out)
    int64_t k_nonfree_scan(int64_t x, int64_t n, int64_t v, const int8_t *mu, int64_t mu_base,
                           const int64_t *S, int64_t slen, int64_t r0, i128 *sigma, i128 *total)
    i128 k_brute_block(int64_t x, int64_t m0, int64_t n0, const int8_t *f, int64_t lf,
                       const int8_t *g, int64_t lg)
    int k_sum_by_lin(const int8_t *f, const int8_t *g, int64_t x, int64_t mc, int64_t nc,
                     int64_t a, int64_t b, int64_t *work, i128 *result)
    int k_double_sum(int64_t m0, int64_t m1, int64_t n0, int64_t n1, int64_t a, int64_t b,
                     const int8_t *f, const int8_t *g, int64_t x, i128 *result)

NAME = "c"

cdef object _to_py(i128 v):
    cdef int64_t hi
    cdef uint64_t lo
    split128(v, &hi, &lo)
    return (<object>hi << 64) | <object>lo


cdef i128 _from_py(object v):
    return join128(<int64_t>(v >> 64), <uint64_t>(v & 0xFFFFFFFFFFFFFFFF))


cdef const int64_t[::1] _primes(primes):
    return np.ascontiguousarray(primes, dtype=np.int64)


cdef const int8_t[::1] _i8(a):
    return np.ascontiguousarray(a, dtype=np.int8)


def mu_window(int64_t n0, int64_t delta, primes):
    """mu(n0), ..., mu(n0 + delta) as int8."""
    cdef const int64_t[::1] P = _primes(primes)
    out = np.empty(delta + 1, dtype=np.int8)
    lg = np.empty(delta + 1, dtype=np.uint8)
    cdef int8_t[::1] mv = out
    cdef uint8_t[::1] lv = lg
    cdef int64_t np_ = P.shape[0]
    with nogil:
        k_mu_window(n0, delta, &P[0] if np_ else NULL, np_, &mv[0], &lv[0])
    return out


def mertens_range(int64_t n0, int64_t n1, primes):
    """Sum of mu(n) for n0 <= n <= n1."""
    cdef const int64_t[::1] P = _primes(primes)
    cdef int64_t np_ = P.shape[0], r
    if n1 < n0:
        return 0
    with nogil:
        r = k_mertens_range(n0, n1, &P[0] if np_ else NULL, np_)
    return r


def d_values(int64_t x, int64_t r0, int64_t delta, primes):
    """D(r; x/r) for r0 <= r <= r0 + delta."""
    cdef const int64_t[::1] P = _primes(primes)
    out = np.empty(delta + 1, dtype=np.int64)
    cdef int64_t[::1] ov = out
    cdef int64_t np_ = P.shape[0]
    with nogil:
        k_d_values(x, r0, delta, &P[0] if np_ else NULL, np_, &ov[0])
    return out


def nonfree_scan(int64_t x, int64_t n, int64_t v, mu, int64_t mu_base, S, int64_t r0,
                 sigma, total):
    """Advance the descending n loop until it leaves the mu or S window."""
    cdef const int8_t[::1] M = _i8(mu)
    cdef const int64_t[::1] SS = np.ascontiguousarray(S, dtype=np.int64)
    cdef i128 sg = _from_py(sigma)
    cdef i128 tot = _from_py(total)
    with nogil:
        n = k_nonfree_scan(x, n, v, &M[0], mu_base, &SS[0], SS.shape[0], r0, &sg, &tot)
    return n, _to_py(sg), _to_py(tot)


def brute_block(int64_t x, int64_t m0, int64_t n0, f, g):
    """Sum of f[i] g[j] floor(x / ((m0+i)(n0+j)))."""
    cdef const int8_t[::1] F = _i8(f)
    cdef const int8_t[::1] G = _i8(g)
    cdef i128 r
    if F.shape[0] == 0 or G.shape[0] == 0:
        return 0
    with nogil:
        r = k_brute_block(x, m0, n0, &F[0], F.shape[0], &G[0], G.shape[0])
    return _to_py(r)


def sum_by_lin(f, g, int64_t x, int64_t mc, int64_t nc, int64_t a, int64_t b):
    cdef const int8_t[::1] F = _i8(f)
    cdef const int8_t[::1] G = _i8(g)
    work = np.empty(6 * b + 2, dtype=np.int64)
    cdef int64_t[::1] W = work
    cdef i128 r
    cdef int err
    with nogil:
        err = k_sum_by_lin(&F[0], &G[0], x, mc, nc, a, b, &W[0], &r)
    if err:
        from .free import sum_by_lin as slow
        return slow(f, g, x, mc, nc, a, b)
    return _to_py(r)


def double_sum(int64_t m0, int64_t m1, int64_t n0, int64_t n1, int64_t a, int64_t b, f, g,
               int64_t x):
    cdef const int8_t[::1] F = _i8(f)
    cdef const int8_t[::1] G = _i8(g)
    cdef i128 r
    cdef int err
    if m1 <= m0 or n1 <= n0:
        return 0
    with nogil:
        err = k_double_sum(m0, m1, n0, n1, a, b, &F[0], &G[0], x, &r)
    if err:
        from . import _pykernels
        return _pykernels.double_sum(m0, m1, n0, n1, a, b, f, g, x)
    return _to_py(r)
