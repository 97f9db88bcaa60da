"""Top-level assembly M(x) = 2 M(u) - (non-free pass) - (free pass)."""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from . import _backend
from .arith import DomainError, iroot, isqrt, overflow_bound_log2, overflow_guard
from .free import large_free
from .nonfree import brute_m, large_nonfree

log = logging.getLogger(__name__)

DEFAULT_C = 3 / math.sqrt(2)
MODES = ("elementary", "brute", "verify", "bench")
#: Largest x verify mode accepts unless told otherwise.
VERIFY_CAP = 10 ** 9


class GuardRefused(RuntimeError):
    """The intermediate-size bound for the chosen v exceeds the word size."""

    def __init__(self, x, v, c, bound_log2):
        super().__init__(f"overflow guard refused x={x}, v={v}, c={c}: "
                         f"log2 bound {bound_log2:.3f} >= 127")
        self.x, self.v, self.c, self.bound_log2 = x, v, c, bound_log2


class VerifyMismatch(RuntimeError):
    def __init__(self, x, elementary, brute):
        super().__init__(f"M({x}): elementary {elementary} != brute {brute}")
        self.x, self.elementary, self.brute = x, elementary, brute


@dataclass
class RunConfig:
    x: int
    c: float = DEFAULT_C
    threads: int = 1
    mode: str = "elementary"
    nonfree_delta: Optional[int] = None
    free_C: int = 10
    free_D: int = 8
    backend: Optional[str] = None
    shrink_c: bool = False
    verify_cap: int = VERIFY_CAP
    csv: bool = False

    def __post_init__(self):
        if self.x < 1:
            raise DomainError("x must be >= 1")
        if not self.c > 0:
            raise DomainError("c must be positive")
        if self.mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}")
        if self.threads < 1:
            raise DomainError("threads must be >= 1")


@dataclass
class RunReport:
    x: int
    mertens: int
    v: int
    u: int
    t_nonfree: float = 0.0
    t_free: float = 0.0
    t_bruteu: float = 0.0
    t_total: float = 0.0
    threads: int = 1
    c: float = DEFAULT_C
    mode: str = "elementary"
    backend: str = ""

    CSV_HEADER = "x,mertens,v,u,t_nonfree_s,t_free_s,t_bruteu_s,threads"

    def csv_row(self) -> str:
        return (f"{self.x},{self.mertens},{self.v},{self.u},{self.t_nonfree:.3f},"
                f"{self.t_free:.3f},{self.t_bruteu:.3f},{self.threads}")


def choose_v(x: int, c: float = DEFAULT_C) -> int:
    """v = floor(c x^(2/5) (log log x / log x)^(3/5)), clamped to [1, isqrt(x)].

    For x < 16 (where log log x is not positive enough to matter) v is
    floor(x^(2/5)).
    """
    u = isqrt(x)
    if x < 16:
        v = iroot(x * x, 5)
    else:
        lx = math.log(x)
        v = int(c * math.exp(0.4 * lx) * (math.log(lx) / lx) ** 0.6)
    return min(max(v, 1), u)


def _guarded_v(cfg: RunConfig):
    c = cfg.c
    v = choose_v(cfg.x, c)
    while not overflow_guard(cfg.x, v):
        bound = overflow_bound_log2(cfg.x, v)
        if not cfg.shrink_c:
            raise GuardRefused(cfg.x, v, c, bound)
        c *= 0.9
        log.warning("overflow guard: log2 bound %.3f, shrinking c to %.4f", bound, c)
        v = choose_v(cfg.x, c)
    return v, c


def mertens_elementary(x: int, v: Optional[int] = None, *, threads: int = 1, backend=None,
                       nonfree_delta=None, C: int = 10, D: int = 8) -> int:
    """M(x) by the combinatorial identity, without the config plumbing."""
    u = isqrt(x)
    if v is None:
        v = choose_v(x)
    return (2 * brute_m(u, backend=backend)
            - large_nonfree(x, v, u, delta=nonfree_delta, threads=threads, backend=backend)
            - large_free(x, v, C=C, D=D, threads=threads, backend=backend))


def mertens(config: RunConfig) -> RunReport:
    """Run one configuration; verify mode raises VerifyMismatch on disagreement."""
    x = config.x
    u = isqrt(x)
    kern = _backend.for_x(x, config.backend)
    t_start = time.perf_counter()
    if config.mode == "brute":
        value = brute_m(x, backend=kern)
        rep = RunReport(x, value, 0, u, threads=config.threads, c=config.c,
                        mode="brute", backend=_backend.name_of(kern))
        rep.t_total = time.perf_counter() - t_start
        return rep
    if config.mode == "verify" and x > config.verify_cap:
        raise DomainError(f"verify mode is capped at x <= {config.verify_cap}")
    v, c = _guarded_v(config)
    t0 = time.perf_counter()
    mu_u = brute_m(u, backend=kern)
    t1 = time.perf_counter()
    nf = large_nonfree(x, v, u, delta=config.nonfree_delta, threads=config.threads,
                       backend=kern)
    t2 = time.perf_counter()
    fr = large_free(x, v, C=config.free_C, D=config.free_D, threads=config.threads,
                    backend=kern)
    t3 = time.perf_counter()
    value = 2 * mu_u - nf - fr
    rep = RunReport(x, value, v, u, t_nonfree=t2 - t1, t_free=t3 - t2, t_bruteu=t1 - t0,
                    threads=config.threads, c=c, mode=config.mode,
                    backend=_backend.name_of(kern))
    if config.mode == "verify":
        ref = brute_m(x, backend=kern)
        if ref != value:
            raise VerifyMismatch(x, value, ref)
    rep.t_total = time.perf_counter() - t_start
    return rep


@dataclass
class ScalingResult:
    rows: List[RunReport] = field(default_factory=list)
    seconds: List[float] = field(default_factory=list)
    slope: Optional[float] = None

    def csv(self) -> str:
        lines = [RunReport.CSV_HEADER + ",seconds"]
        lines += [f"{r.csv_row()},{s:.3f}" for r, s in zip(self.rows, self.seconds)]
        lines.append(f"# slope,{'' if self.slope is None else f'{self.slope:.4f}'}")
        return "\n".join(lines)


def fit_slope(xs: Sequence[int], ts: Sequence[float]) -> Optional[float]:
    """Least-squares slope of log2 t against log2 x; None with fewer than two x."""
    if len(set(xs)) < 2:
        return None
    lx = np.log2(np.asarray(xs, dtype=float))
    lt = np.log2(np.maximum(np.asarray(ts, dtype=float), 1e-9))
    return float(np.polyfit(lx, lt, 1)[0])


def bench_scaling(x_list: Sequence[int], config: RunConfig) -> ScalingResult:
    """Time elementary mode for each x and fit the growth exponent."""
    if list(x_list) != sorted(x_list):
        raise DomainError("x_list must be sorted ascending")
    out = ScalingResult()
    for x in x_list:
        cfg = RunConfig(**{**config.__dict__, "x": x, "mode": "elementary"})
        t0 = time.perf_counter()
        rep = mertens(cfg)
        out.seconds.append(time.perf_counter() - t0)
        out.rows.append(rep)
    out.slope = fit_slope([r.x for r in out.rows], out.seconds)
    return out
