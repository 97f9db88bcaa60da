"""Exact M(x) = sum of mu(n) for n <= x in about x^(3/5) elementary operations."""

from .arith import (DiophApprox, DomainError, ExactRational, IntInterval, dioph_appr,
                    flcong, isqrt, mod_nonneg, overflow_guard, quad_ineq_z, sgn)
from .divisor_sum import facto_sum_mu
from .driver import RunConfig, RunReport, bench_scaling, choose_v, mertens, mertens_elementary
from .free import large_free, sum_by_lin
from .nonfree import brute_m, large_nonfree, sarr
from .sieve import pack_factors, seg_factor, seg_mu, seg_primes, simple_sieve, unpack_factors

__version__ = "0.1.0"

__all__ = [
    "DiophApprox", "DomainError", "ExactRational", "IntInterval", "dioph_appr", "flcong",
    "isqrt", "mod_nonneg", "overflow_guard", "quad_ineq_z", "sgn", "facto_sum_mu",
    "RunConfig", "RunReport", "bench_scaling", "choose_v", "mertens", "mertens_elementary",
    "large_free", "sum_by_lin", "brute_m", "large_nonfree", "sarr", "pack_factors",
    "seg_factor", "seg_mu", "seg_primes", "simple_sieve", "unpack_factors",
]
