"""Fejér-weighted double and triple correlations, evaluated two ways.

The direct path computes

    sum_{|h| <= H} (1 - |h|/H) sum_{n <= X} f(n) a(n+h) b(n+2h)

and the spectral path evaluates exactly the same number through windowed
convolutions: for every window start x the zero-padded DFT of length
L >= 8H turns sum_{u+v=2w} f_w[u] b_w[v] a_w[w] into an inner product with
even-index convolution coefficients, and an integer (n, h) triple with all
three points n, n+h, n+2h inside (x, x+2H] arises for exactly (2H - 2|h|)+
window starts.  Dividing the window total by 2H therefore reproduces the
Fejér weights with no boundary slack, so both paths agree to rounding.

Boundary convention: arithmetic sequences (mangoldt, bounded multiplicative,
finite tables) vanish at non-positive arguments; the constant sequence
``one`` is the constant on all of Z, which is what makes the all-ones triple
exactly H * X.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetError, ParameterError
from .expsum import sup_alpha_coeffs
from .sieve import sieve_range
from .specs import FunctionSpec, get_evaluator
from .util import next_pow2, ordered_parallel_map

DIRECT_BUDGET = 10_000_000_000  # X * H cap for the double loop


# -- sequence specs -----------------------------------------------------------

_mangoldt_tables = []


def _mangoldt_values(lo, hi, threads=1):
    """von Mangoldt values on [lo, hi), served from a small table cache."""
    for t in _mangoldt_tables:
        if t.start <= lo and t.stop >= hi:
            return t.slice(lo, hi)
    table = sieve_range("mangoldt", lo, hi, threads=threads)
    _mangoldt_tables.append(table)
    if len(_mangoldt_tables) > 64:
        del _mangoldt_tables[0]
    return table.values.copy()


@dataclass(eq=False)
class SequenceSpec:
    """A correlation factor: all-ones, von Mangoldt, a bounded multiplicative
    function, or an explicit finite table."""

    variant: str
    func: FunctionSpec | None = None
    table: np.ndarray | None = None
    table_start: int = 1

    def __post_init__(self):
        if self.variant not in ("one", "mangoldt", "bounded", "table"):
            raise ParameterError(f"unknown sequence variant {self.variant!r}")
        if self.variant == "bounded" and self.func is None:
            raise ParameterError("bounded sequence needs a FunctionSpec")
        if self.variant == "table":
            if self.table is None:
                raise ParameterError("table sequence needs values")
            self.table = np.asarray(self.table)

    @classmethod
    def one(cls):
        return cls("one")

    @classmethod
    def mangoldt(cls):
        return cls("mangoldt")

    @classmethod
    def bounded(cls, func):
        return cls("bounded", func=func)

    @classmethod
    def from_table(cls, values, start=1):
        return cls("table", table=np.asarray(values), table_start=int(start))

    @property
    def is_real(self):
        if self.variant == "bounded":
            return self.func.is_real
        if self.variant == "table":
            return not np.iscomplexobj(self.table)
        return True

    def label(self):
        if self.variant == "bounded":
            return self.func.label()
        if self.variant == "table":
            return f"table[{self.table_start}:{self.table_start + len(self.table)}]"
        return self.variant

    def log_normalized(self):
        """True when values are log-sized rather than bounded by 1."""
        return self.variant == "mangoldt"

    def values(self, lo, hi, threads=1):
        """Values on [lo, hi); lo may be non-positive (see module docstring)."""
        lo, hi = int(lo), int(hi)
        if hi <= lo:
            return np.zeros(0)
        if self.variant == "one":
            return np.ones(hi - lo, dtype=np.float64)
        dtype = np.float64 if self.is_real else np.complex128
        out = np.zeros(hi - lo, dtype=dtype)
        if self.variant == "mangoldt":
            a = max(lo, 2)
            if a < hi:
                out[a - lo :] = _mangoldt_values(a, hi, threads=threads)
            return out
        if self.variant == "bounded":
            a = max(lo, 1)
            if a < hi:
                ev = get_evaluator(self.func, threads=threads)
                out[a - lo :] = ev.values(a, hi)
            return out
        a = max(lo, self.table_start)
        b = min(hi, self.table_start + len(self.table))
        if a < b:
            out[a - lo : b - lo] = self.table[a - self.table_start : b - self.table_start]
        return out


def _coerce_seq(s):
    if isinstance(s, SequenceSpec):
        return s
    if isinstance(s, FunctionSpec):
        return SequenceSpec.bounded(s)
    raise ParameterError(f"cannot interpret {s!r} as a sequence")


# -- correlation reports -------------------------------------------------------

def _fmt_value(v):
    if v is None:
        return ""
    v = complex(v)
    if abs(v.imag) <= 1e-9 * max(1.0, abs(v.real)):
        return f"{v.real:.12g}"
    return f"{v.real:.12g}{v.imag:+.12g}j"


@dataclass
class CorrelationReport:
    X: int
    H: int
    f_label: str
    a_label: str
    b_label: str
    value_direct: complex | None = None
    value_spectral: complex | None = None
    rel_gap: float | None = None
    normalized: complex | None = None  # value / (H X)
    normalized_log: complex | None = None  # mangoldt factors divided out
    components: list | None = None  # (h, weight, inner sum)

    @property
    def value(self):
        return self.value_direct if self.value_direct is not None else self.value_spectral

    def csv_row(self):
        gap = "" if self.rel_gap is None else f"{self.rel_gap:.6g}"
        return (
            f"{self.X},{self.H},{self.f_label},{self.a_label},{self.b_label},"
            f"{_fmt_value(self.value_direct)},{_fmt_value(self.value_spectral)},"
            f"{gap},{_fmt_value(self.normalized)}"
        )


CSV_HEADER_TRIPLE = "X,H,f,a,b,value_direct,value_spectral,rel_gap,normalized"


def _finalize(report, X, H, a, b):
    v = report.value
    report.normalized = v / (H * X)
    logs = sum(1 for s in (a, b) if s.log_normalized())
    report.normalized_log = v / (H * X * math.log(max(X, 3)) ** logs)
    d, s = report.value_direct, report.value_spectral
    if d is not None and s is not None:
        denom = max(abs(d), abs(s))
        report.rel_gap = abs(d - s) / denom if denom > 0 else abs(d - s)
    return report


def triple_direct(f, a, b, X, H, keep_components=False, threads=1):
    """Fejér-weighted triple correlation by explicit shifts."""
    X, H = int(X), int(H)
    if X < 1 or H < 1:
        raise ParameterError("need X >= 1 and H >= 1")
    if X * H > DIRECT_BUDGET:
        raise BudgetError(
            f"X*H = {X * H} exceeds the direct budget; use triple_spectral"
        )
    a, b = _coerce_seq(a), _coerce_seq(b)
    ev = get_evaluator(f, threads=threads)
    fv = np.asarray(ev.values(1, X + 1))
    lo = 1 - 2 * H
    A = a.values(lo, X + 2 * H + 1, threads=threads)
    B = b.values(lo, X + 2 * H + 1, threads=threads)

    value = 0.0
    components = [] if keep_components else None
    for h in range(-H, H + 1):
        w = 1.0 - abs(h) / H
        ia = (1 + h) - lo
        ib = (1 + 2 * h) - lo
        inner = (fv * A[ia : ia + X] * B[ib : ib + X]).sum()
        value = value + w * inner
        if keep_components:
            components.append((h, w, complex(inner)))
    rep = CorrelationReport(
        X=X, H=H, f_label=f.label(), a_label=a.label(), b_label=b.label(),
        value_direct=complex(value), components=components,
    )
    return _finalize(rep, X, H, a, b)


def window_triple(f_vals, a_vals, b_vals):
    """sum_{u+v=2w} f[u] b[v] a[w] for one window, via zero-padded DFT."""
    f_vals = np.asarray(f_vals)
    a_vals = np.asarray(a_vals)
    b_vals = np.asarray(b_vals)
    W = len(f_vals)
    if len(a_vals) != W or len(b_vals) != W:
        raise ParameterError("window arrays must share a length")
    L = next_pow2(4 * W)
    c = np.fft.ifft(np.fft.fft(f_vals, n=L) * np.fft.fft(b_vals, n=L))
    even = c[0 : 2 * W : 2]
    return complex((a_vals * even).sum())


def triple_spectral(f, a, b, X, H, threads=1):
    """Same correlation through per-window convolutions (see module doc)."""
    X, H = int(X), int(H)
    if X < 1 or H < 1:
        raise ParameterError("need X >= 1 and H >= 1")
    a, b = _coerce_seq(a), _coerce_seq(b)
    ev = get_evaluator(f, threads=threads)
    fv = np.asarray(ev.values(1, X + 1))

    W = 2 * H
    n0, n1 = 2 - W, X + W - 1  # integers touched by any window with f support
    span = n1 - n0 + 1
    F = np.zeros(span, dtype=fv.dtype)
    F[1 - n0 : X + 1 - n0] = fv
    A = a.values(n0, n1 + 1, threads=threads)
    B = b.values(n0, n1 + 1, threads=threads)

    real = not (np.iscomplexobj(F) or np.iscomplexobj(A) or np.iscomplexobj(B))
    L = next_pow2(8 * H)
    n_windows = span - W + 1  # starts x = n0 - 1 ... X - 1
    fw = np.lib.stride_tricks.sliding_window_view(F, W)
    aw = np.lib.stride_tricks.sliding_window_view(A, W)
    bw = np.lib.stride_tricks.sliding_window_view(B, W)
    rows = max(1, (1 << 21) // L)
    chunks = list(range(0, n_windows, rows))

    def work(s):
        e = min(s + rows, n_windows)
        if real:
            Ff = np.fft.rfft(fw[s:e], n=L, axis=1)
            Fb = np.fft.rfft(bw[s:e], n=L, axis=1)
            c = np.fft.irfft(Ff * Fb, n=L, axis=1)
        else:
            Ff = np.fft.fft(fw[s:e], n=L, axis=1)
            Fb = np.fft.fft(bw[s:e], n=L, axis=1)
            c = np.fft.ifft(Ff * Fb, axis=1)
        even = c[:, 0 : 2 * W : 2]
        return (aw[s:e] * even).sum()

    partials = ordered_parallel_map(work, chunks, threads=threads)
    value = sum(partials) / W
    rep = CorrelationReport(
        X=X, H=H, f_label=f.label(), a_label=a.label(), b_label=b.label(),
        value_spectral=complex(value),
    )
    return _finalize(rep, X, H, a, b)


def triple_report(f, a, b, X, H, direct=True, spectral=True,
                  keep_components=False, threads=1):
    """Run the requested paths and merge into one report with the gap."""
    a, b = _coerce_seq(a), _coerce_seq(b)
    rep = None
    if direct:
        rep = triple_direct(f, a, b, X, H, keep_components=keep_components,
                            threads=threads)
    if spectral:
        spec_rep = triple_spectral(f, a, b, X, H, threads=threads)
        if rep is None:
            rep = spec_rep
        else:
            rep.value_spectral = spec_rep.value_spectral
    return _finalize(rep, int(X), int(H), a, b)


# -- averaged two-point correlation -------------------------------------------

@dataclass
class Chowla2Report:
    X: int
    H: int
    spec_label: str
    statistic: float
    r0_abs: float
    h0_share: float  # |r(0)| / (H X), a lower bound for the statistic

    def csv_row(self):
        return (
            f"{self.X},{self.H},{self.spec_label},{self.statistic:.12g},"
            f"{self.r0_abs:.12g}"
        )


CSV_HEADER_CHOWLA2 = "X,H,f,statistic,r0_abs"


def chowla2_one_closed_form(X, H):
    """Exact statistic for f = one: r(h) = X for 0 <= h <= H and X - |h|
    for negative h (factors below 1 vanish, above X they run to X + H)."""
    return ((2 * H + 1) * X - H * (H + 1) / 2) / (H * X)


def averaged_chowla2(f, X, H, threads=1):
    """(1/HX) sum_{|h| <= H} |sum_{n <= X} f(n) conj(f(n+h))| by one
    zero-padded cross-correlation transform of length >= 2(X + H)."""
    X, H = int(X), int(H)
    if X < 1 or not 1 <= H <= X:
        raise ParameterError("need 1 <= H <= X")
    if X > 100_000_000:
        raise BudgetError("X above the 1e8 transform memory budget")
    ev = get_evaluator(f, threads=threads)
    b = np.asarray(ev.values(1, X + H + 1))
    avals = b[:X]
    L = next_pow2(2 * (X + H))
    if np.iscomplexobj(b):
        z = np.fft.ifft(np.fft.fft(avals, n=L) * np.conj(np.fft.fft(b, n=L)))
    else:
        z = np.fft.irfft(
            np.fft.rfft(avals, n=L) * np.conj(np.fft.rfft(b, n=L)), n=L
        )
    hs = np.arange(-H, H + 1)
    r = z[(-hs) % L]
    stat = float(np.abs(r).sum()) / (H * X)
    r0 = float(abs(z[0]))
    return Chowla2Report(
        X=X, H=H, spec_label=f.label(), statistic=stat, r0_abs=r0,
        h0_share=r0 / (H * X),
    )


# -- cube integral of a window sum ---------------------------------------------

@dataclass
class L3Report:
    x: int
    H: int
    seq_label: str
    integral: float  # quadrature of |S|^3 over [0, 1)
    ratio: float  # integral / H^2
    grid: int


def l3_bound_check(a, x, H):
    """Quadrature of the cube of |S_{x,a}| over a 16H-point DFT grid, where
    S_{x,a}(alpha) = sum_{x < n <= x+2H} a(n) e(-alpha n); returns the
    integral and its ratio against H^2."""
    a = _coerce_seq(a)
    x, H = int(x), int(H)
    if H < 1 or x < 0:
        raise ParameterError("need H >= 1 and x >= 0")
    vals = a.values(x + 1, x + 2 * H + 1)
    grid = 16 * H
    mags = np.abs(np.fft.fft(vals, n=grid))
    integral = float((mags**3).mean())
    return L3Report(
        x=x, H=H, seq_label=a.label(), integral=integral,
        ratio=integral / (H * H), grid=grid,
    )


# -- Cauchy-Schwarz chain ------------------------------------------------------

@dataclass
class CsChainReport:
    X: int
    H: int
    triple_abs: float
    sup_integral: float  # estimate of int_x sup_alpha |S_{x,f}(alpha)| dx
    bound: float  # H^(2/3) X^(2/3) (sup integral)^(1/3)
    holds: bool
    n_windows: int


def cs_chain_check(f, a, b, X, H, n_windows=48, tau=0.05, threads=1):
    """Check |triple| <= H^(2/3) X^(2/3) (int sup)^(1/3), the shape the
    chain of Cauchy-Schwarz and cube-integral bounds produces.

    The sup integral is estimated from certified window suprema (upper
    bounds) on evenly spaced windows of length 2H, so the right-hand side
    is a quadrature estimate, not a certified bound.
    """
    X, H = int(X), int(H)
    rep = triple_report(
        f, a, b, X, H,
        direct=X * H <= 100_000_000,
        spectral=X * H > 100_000_000,
        threads=threads,
    )
    ev = get_evaluator(f, threads=threads)
    fv = np.asarray(ev.values(1, X + 1)).astype(np.complex128)
    W = 2 * H
    x_lo, x_hi = 1 - W, X - 1
    n_windows = min(n_windows, x_hi - x_lo + 1)
    sups = []
    for j in range(n_windows):
        xw = x_lo + (j * (x_hi - x_lo)) // max(1, n_windows - 1)
        lo = max(1, xw + 1)
        hi = min(X, xw + W)
        coeffs = np.zeros(W, dtype=np.complex128)
        if lo <= hi:
            coeffs[lo - (xw + 1) : hi - xw] = fv[lo - 1 : hi]
        _, _, bound, _, _ = sup_alpha_coeffs(coeffs, tau)
        sups.append(bound)
    integral = float(np.mean(sups)) * (x_hi - x_lo + 1)
    rhs = H ** (2.0 / 3.0) * X ** (2.0 / 3.0) * integral ** (1.0 / 3.0)
    lhs = abs(rep.value)
    return CsChainReport(
        X=X, H=H, triple_abs=lhs, sup_integral=integral, bound=rhs,
        holds=lhs <= rhs, n_windows=n_windows,
    )
