"""Pretentious (Granville-Soundararajan) distance over character twists.

D(f; X; Q, t_max)^2 = min over chi mod q <= Q and |t| <= t_max of
    sum_{p <= X} (1 - Re(f(p) chi(p) p^{it})) / p,
each summand clamped to [0, 2].  The t-grid is anchored at 0 with spacing
h = tol / (2 log X); since |d/dt| <= sum_p (log p)/p <= 2 log X the grid is a
certificate: the true minimum lies within tol/2 of the best grid value.
Golden-section refinement then polishes every local-minimum cell sitting
within tol of the per-character grid minimum.  Because refinement candidates
are keyed to per-character values and anchored grids nest, computed minima
are exactly non-increasing in Q and in t_max.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .characters import characters_mod
from .errors import ParameterError
from .sieve import primes_in

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
EVAL_BUDGET = 4_000_000_000


@dataclass
class DistanceResult:
    spec_label: str
    X: int
    Q: int
    t_max: float
    tol: float
    distance: float
    d_squared: float
    argmin_t: float
    argmin_q: int
    argmin_index: int
    grid_spacing: float

    def csv_row(self):
        return (
            f"{self.spec_label},{self.X},{self.Q},{self.t_max:.12g},"
            f"{self.tol:.12g},{self.distance:.12g},{self.argmin_t:.12g},"
            f"{self.argmin_q},{self.argmin_index}"
        )


CSV_HEADER_DISTANCE = "spec,X,Q,t_max,tol,D,argmin_t,argmin_q,argmin_index"


def _objective_scalar(t, logs, invp, cvals):
    """Clamped objective at a single t (used for refinement and reporting)."""
    summand = 1.0 - (cvals * np.exp(1j * t * logs)).real
    return float((invp * np.clip(summand, 0.0, 2.0)).sum())


def _grid_objective(tgrid, logs, invp, cvals, a_total):
    """Objective on a t-grid via chunked matrix products (unclamped form)."""
    weighted = cvals * invp
    out = np.empty(len(tgrid))
    for i in range(0, len(tgrid), 2048):
        tt = tgrid[i : i + 2048]
        out[i : i + 2048] = a_total - (
            np.exp(1j * tt[:, None] * logs[None, :]) @ weighted
        ).real
    return out


def _golden_minimize(fn, a, b, iterations=60):
    """Deterministic golden-section minimum of fn on [a, b]."""
    x1 = b - GOLDEN * (b - a)
    x2 = a + GOLDEN * (b - a)
    f1, f2 = fn(x1), fn(x2)
    best_t, best_v = (x1, f1) if f1 <= f2 else (x2, f2)
    for _ in range(iterations):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - GOLDEN * (b - a)
            f1 = fn(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + GOLDEN * (b - a)
            f2 = fn(x2)
        if f1 < best_v:
            best_t, best_v = x1, f1
        if f2 < best_v:
            best_t, best_v = x2, f2
    return best_t, best_v


def pretentious_distance(spec, X, Q, t_max, tol=0.01):
    """DistanceResult for spec against all character twists chi(n) n^{it}."""
    X, Q = int(X), int(Q)
    if X < 2 or X > 100_000_000:
        raise ParameterError("X must lie in [2, 1e8]")
    if Q < 1:
        raise ParameterError("Q must be >= 1")
    if not 0 < tol <= 0.1:
        raise ParameterError("tol must lie in (0, 0.1]")
    if t_max < 0:
        raise ParameterError("t_max must be >= 0")

    primes = primes_in(2, X + 1)
    logs = np.log(primes.astype(np.float64))
    invp = 1.0 / primes.astype(np.float64)
    a_total = float(invp.sum())
    fp = np.asarray(spec.prime_values_array(primes), dtype=np.complex128)

    logX = math.log(X)
    spacing = tol / (2.0 * logX)
    K = int(math.floor(t_max / spacing)) if t_max > 0 else 0
    tgrid = np.arange(-K, K + 1, dtype=np.float64) * spacing

    n_chars = sum(len(characters_mod(q)) for q in range(1, Q + 1))
    if len(tgrid) * len(primes) * n_chars > EVAL_BUDGET:
        raise ParameterError(
            "distance grid exceeds the evaluation budget; "
            "raise tol or lower t_max / Q / X"
        )

    best = None  # (d2, t, q, index)
    for q in range(1, Q + 1):
        for chi in characters_mod(q):
            cvals = fp * chi.value_table()[primes % q]
            grid_vals = _grid_objective(tgrid, logs, invp, cvals, a_total)
            gmin_idx = int(np.argmin(grid_vals))
            gmin = float(grid_vals[gmin_idx])
            scalar = lambda t: _objective_scalar(t, logs, invp, cvals)
            # candidate cells: local minima within 2*tol of this character's
            # grid minimum (the 2*tol margin, with >=-ties kept, makes the
            # computed minimum exactly non-increasing under grid extension)
            near = grid_vals <= gmin + 2.0 * tol
            left_ok = np.empty(len(tgrid), dtype=bool)
            right_ok = np.empty(len(tgrid), dtype=bool)
            left_ok[0] = right_ok[-1] = True
            left_ok[1:] = grid_vals[:-1] >= grid_vals[1:]
            right_ok[:-1] = grid_vals[1:] >= grid_vals[:-1]
            cand = [gmin_idx] + list(np.nonzero(near & left_ok & right_ok)[0])
            d2_chi, t_chi = scalar(float(tgrid[gmin_idx])), float(tgrid[gmin_idx])
            for i in sorted(set(cand)):
                lo = float(tgrid[max(i - 1, 0)])
                hi = float(tgrid[min(i + 1, len(tgrid) - 1)])
                if hi > lo:
                    t_ref, v_ref = _golden_minimize(scalar, lo, hi)
                else:
                    t_ref, v_ref = float(tgrid[i]), scalar(float(tgrid[i]))
                if v_ref < d2_chi:
                    d2_chi, t_chi = v_ref, t_ref
            if best is None or d2_chi < best[0]:
                best = (d2_chi, t_chi, q, chi.index)

    d2, t_star, q_star, idx_star = best
    return DistanceResult(
        spec_label=spec.label(),
        X=X,
        Q=Q,
        t_max=float(t_max),
        tol=float(tol),
        distance=math.sqrt(max(d2, 0.0)),
        d_squared=d2,
        argmin_t=t_star,
        argmin_q=q_star,
        argmin_index=idx_star,
        grid_spacing=spacing,
    )


def reevaluate_argmin(spec, result):
    """Recompute the objective at the reported argmin (reproducibility check)."""
    primes = primes_in(2, result.X + 1)
    logs = np.log(primes.astype(np.float64))
    invp = 1.0 / primes.astype(np.float64)
    fp = np.asarray(spec.prime_values_array(primes), dtype=np.complex128)
    chi = characters_mod(result.argmin_q)[result.argmin_index]
    cvals = fp * chi.value_table()[primes % result.argmin_q]
    return _objective_scalar(result.argmin_t, logs, invp, cvals)


def conjugate_product_spec(f_spec, g_spec, X):
    """custom_primes spec with values f(p) * conj(g(p)) for p <= X."""
    from .specs import FunctionSpec

    primes = primes_in(2, int(X) + 1)
    fv = np.asarray(f_spec.prime_values_array(primes), dtype=np.complex128)
    gv = np.asarray(g_spec.prime_values_array(primes), dtype=np.complex128)
    vals = {int(p): complex(a * np.conj(b)) for p, a, b in zip(primes, fv, gv)}
    return FunctionSpec.custom_primes(vals, default=1.0)
