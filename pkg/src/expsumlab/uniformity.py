"""Interval families over [X/10, 10X] and Fourier-uniformity statistics.

A strict family places length-H intervals at starts (500*l + v)*H + y with a
seeded offset y in [0, H) and one slot v in [0, 500), so members are pairwise
at least 500*H apart; the slot layout means any 1/500-density phenomenon is
caught by scanning v (the classical pigeonhole that furnishes such families).
A dense family is just consecutive intervals from X, used for plain averages.
A stratified family cuts [X/10, 10X] into M equal strata and draws one
interval per stratum (disjoint since each stratum is wider than H); it is the
sampling design for the x-integral behind the uniformity statistic, where
M can exceed the strict-mode capacity.

The uniformity statistic U is the family mean of sup_alpha |S_I(alpha)| / H,
with each sup certified to tau * H.  All sampled runs require a seed;
per-interval work may run on threads but is reduced in index order, so
reports are identical for any thread count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError
from .expsum import Interval, short_sum, sup_alpha
from .specs import FunctionSpec, get_evaluator
from .util import ordered_parallel_map

TWO_PI = 2.0 * math.pi
DEFAULT_MAX_SAMPLES = 512


@dataclass(frozen=True)
class ToleranceConfig:
    """Shared tolerance knobs (eta, eps, rho, theta, delta) plus the seed."""

    eta: float = 0.25
    eps: float = 1e-5
    rho: float = 0.1
    theta: float = 0.5
    delta: float = 0.1
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.theta < 1:
            raise ParameterError("theta must lie in (0, 1)")
        if not 0 < self.rho < 0.125:
            raise ParameterError("rho must lie in (0, 1/8)")
        if not 0 < self.eps < self.rho / 100.0:
            raise ParameterError("eps must lie in (0, rho/100)")
        if self.eta <= 0 or self.delta <= 0:
            raise ParameterError("eta and delta must be positive")


@dataclass
class IntervalFamily:
    X: int
    H: int
    mode: str  # "strict" or "dense"
    intervals: list
    offset: int = 0  # y in [0, H)
    slot: int = 0  # v in [0, 500)
    seed: int = None

    def __post_init__(self):
        lo, hi = self.X // 10, 10 * self.X
        if len(self.intervals) > self.X // self.H:
            raise ParameterError("family larger than X/H")
        for iv in self.intervals:
            if iv.x < lo or iv.x + iv.H > hi:
                raise ParameterError(
                    f"interval ({iv.x}, {iv.x + iv.H}] outside [{lo}, {hi}]"
                )
        if self.mode == "strict":
            starts = sorted(iv.x for iv in self.intervals)
            for a, b in zip(starts, starts[1:]):
                if b - a < 500 * self.H:
                    raise ParameterError(
                        f"strict family separation {b - a} < {500 * self.H}"
                    )

    @property
    def starts(self):
        return np.array([iv.x for iv in self.intervals], dtype=np.int64)

    def coverage(self):
        """(lo, hi) range of integers any member can touch."""
        return (
            min(iv.lo for iv in self.intervals),
            max(iv.hi for iv in self.intervals),
        )


def strict_slot_range(X, H, offset, slot):
    """Feasible l-range so that ((500l + v)H + y, ... + H] stays in [X/10, 10X]."""
    lo, hi = X // 10, 10 * X
    base = slot * H + offset
    l_min = max(0, -(-(lo - base) // (500 * H)))  # ceil
    l_max = (hi - H - base) // (500 * H)
    return l_min, l_max


def build_family(X, H, mode="strict", seed=None, size=None, slot=None):
    """Construct an interval family; strict mode samples stratified slots."""
    X, H = int(X), int(H)
    if H < 8:
        raise ParameterError("H must be >= 8")
    if mode == "strict":
        if H > X // 10_000:
            raise ParameterError("strict mode requires H <= X / 10^4")
        if seed is None:
            raise ParameterError("strict (sampled) families require a seed")
        rng = np.random.default_rng(seed)
        offset = int(rng.integers(0, H))
        v = int(seed) % 500 if slot is None else int(slot)
        l_min, l_max = strict_slot_range(X, H, offset, v)
        capacity = l_max - l_min + 1
        if capacity <= 0:
            raise ParameterError("no room for a strict family at these X, H")
        m = capacity if size is None else int(size)
        if m > capacity:
            raise ParameterError(f"requested {m} intervals, capacity {capacity}")
        strata = np.array_split(np.arange(l_min, l_max + 1), m)
        ls = [int(s[rng.integers(0, len(s))]) for s in strata]
        intervals = [Interval((500 * l + v) * H + offset, H) for l in ls]
        return IntervalFamily(X, H, "strict", intervals, offset, v, seed)
    if mode == "dense":
        m = min(X // H, DEFAULT_MAX_SAMPLES) if size is None else int(size)
        if X + m * H > 10 * X:
            raise ParameterError("dense family must fit below 10X")
        intervals = [Interval(X + i * H, H) for i in range(m)]
        return IntervalFamily(X, H, "dense", intervals, 0, 0, seed)
    if mode == "stratified":
        if seed is None:
            raise ParameterError("stratified (sampled) families require a seed")
        m = min(X // H, DEFAULT_MAX_SAMPLES) if size is None else int(size)
        if not 1 <= m <= X // H:
            raise ParameterError(f"stratified size must lie in [1, {X // H}]")
        lo, hi = X // 10, 10 * X
        rng = np.random.default_rng(seed)
        edges = lo + (np.arange(m + 1, dtype=np.int64) * (hi - lo)) // m
        starts = [
            int(edges[i] + rng.integers(0, edges[i + 1] - edges[i] - H + 1))
            for i in range(m)
        ]
        intervals = [Interval(s, H) for s in starts]
        return IntervalFamily(X, H, "stratified", intervals, 0, 0, seed)
    raise ParameterError(f"unknown family mode {mode!r}")


@dataclass
class UniformityReport:
    spec_label: str
    X: int
    H: int
    M: int
    seed: int
    tau: float
    U: float
    q10: float
    q50: float
    q90: float
    mode: str = "sup"
    per_interval: list = field(default_factory=list, repr=False)

    def csv_row(self):
        return (
            f"{self.X},{self.H},{self.M},{self.seed},{self.tau:.12g},"
            f"{self.U:.12g},{self.q10:.12g},{self.q50:.12g},{self.q90:.12g}"
        )


CSV_HEADER_UNIFORMITY = "X,H,M,seed,tau,U,q10,q50,q90"


def _report(spec, X, H, seed, tau, per_interval, mode):
    normalized = np.array([v / H for (_, _, v) in per_interval])
    q10, q50, q90 = np.quantile(normalized, [0.1, 0.5, 0.9])
    return UniformityReport(
        spec_label=spec.label(),
        X=X,
        H=H,
        M=len(per_interval),
        seed=seed if seed is not None else -1,
        tau=tau,
        U=float(normalized.mean()),
        q10=float(q10),
        q50=float(q50),
        q90=float(q90),
        mode=mode,
        per_interval=per_interval,
    )


def uniformity_statistic(spec, X, H, tau=0.01, seed=None, size=None, threads=1):
    """U = family mean of certified sup_alpha |S_I| / H, sampled stratified."""
    X, H = int(X), int(H)
    if seed is None:
        raise ParameterError("uniformity_statistic is a sampled run; pass a seed")
    family = build_family(X, H, "stratified", seed=seed, size=size)
    ev = get_evaluator(spec, threads=threads)
    lo, hi = family.coverage()
    ev.ensure(lo, hi)

    def work(iv):
        cert = sup_alpha(ev, iv, tau)
        return (iv.x, cert.alpha_star, cert.value)

    per_interval = ordered_parallel_map(work, family.intervals, threads=threads)
    return _report(spec, X, H, seed, tau, per_interval, "sup")


@dataclass
class FixedAlphaReport:
    spec_label: str
    X: int
    H: int
    M: int
    alphas: list
    values: list  # family mean of |S_I(alpha)| / H per candidate
    best_alpha: float
    best_value: float


def fixed_alpha_statistic(spec, X, H, alphas, size=None, threads=1):
    """Family mean of |S_I(alpha)| / H over a dense family, per candidate."""
    X, H = int(X), int(H)
    family = build_family(X, H, "dense", size=size)
    ev = get_evaluator(spec, threads=threads)
    lo, hi = family.coverage()
    ev.ensure(lo, hi)
    alphas = [float(a) for a in alphas]

    def work(alpha):
        vals = [abs(short_sum(ev, iv, alpha)) / H for iv in family.intervals]
        return float(np.mean(vals))

    values = ordered_parallel_map(work, alphas, threads=threads)
    best = int(np.argmax(values)) if values else 0
    return FixedAlphaReport(
        spec_label=spec.label(),
        X=X,
        H=H,
        M=len(family.intervals),
        alphas=alphas,
        values=values,
        best_alpha=alphas[best] if alphas else float("nan"),
        best_value=values[best] if values else float("nan"),
    )


def rational_candidates(q_max):
    """Fractions a/q in lowest terms for q <= q_max (fixed-alpha candidates)."""
    out = [0.0]
    for q in range(2, int(q_max) + 1):
        for a in range(1, q):
            if math.gcd(a, q) == 1:
                out.append(a / q)
    return sorted(set(out))


def archimedean_demo(t, X, H, seed=None, size=None, threads=1):
    """Evaluate |S_I(t / (2 pi x_I))| / H for f(n) = n^{it} over a family.

    The candidate frequency is the stationary phase of n^{it} e(-alpha n) at
    the left endpoint; |t| <= 0.1 * X^2 / H^2 keeps the quadratic phase error
    below 0.05 radians on intervals near X and the statistic near 1.
    """
    X, H = int(X), int(H)
    t = float(t)
    if abs(t) > 0.1 * X * X / (H * H):
        raise ParameterError("archimedean demo requires |t| <= 0.1 X^2/H^2")
    if seed is None:
        raise ParameterError("archimedean_demo is a sampled run; pass a seed")
    spec = FunctionSpec.archimedean(t)
    family = build_family(X, H, "stratified", seed=seed, size=size)
    ev = get_evaluator(spec, threads=threads)

    def work(iv):
        alpha = (t / (TWO_PI * iv.x)) % 1.0
        return (iv.x, alpha, abs(short_sum(ev, iv, alpha)))

    per_interval = ordered_parallel_map(work, family.intervals, threads=threads)
    return _report(spec, X, H, seed, 0.0, per_interval, "archimedean")
