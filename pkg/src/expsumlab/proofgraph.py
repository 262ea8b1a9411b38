"""Machinery that instruments the combinatorial stage of the argument:
scaling consistency of short sums, the prime-ratio graph on interval
families, exact walk counts with the Blakley-Roy lower bound, counts of
near-equal prime products, mixing counts between families, and the global
frequency-model fit alpha_I ~ T / (2 pi x_I) + a_I / q.

Everything that feeds an inequality is exact where it matters: walk counts
use Python integers, Blakley-Roy margins are Fractions, prime-product counts
are integer window counts on sorted product lists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import EmptyFitError, InconsistencyError, ParameterError
from .expsum import short_sum, sup_alpha
from .sieve import primes_in
from .specs import get_evaluator
from .util import ordered_parallel_map

TWO_PI = 2.0 * math.pi


# -- mean scales down --------------------------------------------------------

@dataclass
class MsdReport:
    """Scaling deviation sum_{p <= H} p * |S_p - S/p|^2 for one interval."""

    spec_label: str
    x: int
    H: int
    delta: float
    lhs: float
    lhs_over_h2: float
    n_primes: int
    exceptional: list  # (p, |deviation|) with |dev| > delta * H / p
    exceptional_recip_sum: float


def msd_check(spec, x, H, delta=0.1):
    """Compare each p-dilated partial sum against its share of the full sum.

    S = sum_{x < n <= x+H} f(n);  S_p = sum_{x/p < m <= (x+H)/p} f(p m).
    Elliott-type averaging says sum_p p |S_p - S/p|^2 = O(H^2); primes whose
    deviation exceeds delta * H / p are reported with their 1/p mass.
    """
    x, H = int(x), int(H)
    if x < 1 or H < 8:
        raise ParameterError("msd_check needs x >= 1 and H >= 8")
    ev = get_evaluator(spec)
    vals = np.asarray(ev.values(x + 1, x + H + 1))
    total = vals.sum()
    lhs = 0.0
    exceptional = []
    ps = primes_in(2, H + 1)
    for p in ps:
        p = int(p)
        m_lo = x // p + 1
        m_hi = (x + H) // p
        if m_hi >= m_lo:
            idx = np.arange(m_lo, m_hi + 1, dtype=np.int64) * p - (x + 1)
            part = vals[idx].sum()
        else:
            part = 0.0
        dev = abs(part - total / p)
        lhs += p * dev * dev
        if dev > delta * H / p:
            exceptional.append((p, float(dev)))
    return MsdReport(
        spec_label=spec.label(),
        x=x,
        H=H,
        delta=float(delta),
        lhs=float(lhs),
        lhs_over_h2=float(lhs) / (H * H),
        n_primes=len(ps),
        exceptional=exceptional,
        exceptional_recip_sum=float(sum(1.0 / p for p, _ in exceptional)),
    )


# -- frequency assignments ---------------------------------------------------

@dataclass
class FrequencyAssignment:
    """One frequency alpha_I per interval with its witness strength |S_I|."""

    family: object  # IntervalFamily
    alphas: np.ndarray
    strengths: np.ndarray
    tau: float
    eta: float = 0.0

    def __post_init__(self):
        n = len(self.family.intervals)
        if len(self.alphas) != n or len(self.strengths) != n:
            raise ParameterError("assignment arrays must match the family")


def assign_frequencies(spec, family, tau=0.01, threads=1):
    """Certified sup frequencies as the assignment (strength = sup value)."""
    ev = get_evaluator(spec, threads=threads)
    lo, hi = family.coverage()
    ev.ensure(lo, hi)

    def work(iv):
        cert = sup_alpha(ev, iv, tau)
        return cert.alpha_star, cert.value

    rows = ordered_parallel_map(work, family.intervals, threads=threads)
    return FrequencyAssignment(
        family=family,
        alphas=np.array([r[0] for r in rows]),
        strengths=np.array([r[1] for r in rows]),
        tau=tau,
    )


def synthetic_assignment(family, T, q=1, residues=None):
    """alpha_I = frac(T / (2 pi x_I) + a_I / q) with full synthetic strength.

    Default residues cycle through 0..q-1 so a q > 1 request actually
    produces q-periodic structure; pass residues explicitly to control them.
    """
    xs = family.starts.astype(np.float64)
    if residues is None:
        residues = np.arange(len(xs), dtype=np.int64) % int(q)
    residues = np.asarray(residues, dtype=np.int64)
    alphas = (T / (TWO_PI * xs) + residues / q) % 1.0
    return FrequencyAssignment(
        family=family,
        alphas=alphas,
        strengths=np.full(len(xs), float(family.H)),
        tau=0.0,
    )


# -- prime-ratio graph -------------------------------------------------------

@dataclass
class EdgeRecord:
    """Vertices i < j with dist(I_i, (p2/p1) I_j) <= geom_tol and
    || p2 alpha_i - p1 alpha_j || <= freq_tol (mod 1)."""

    i: int
    j: int
    p1: int
    p2: int
    gap: float
    residual_mod1: float
    primes_ok: tuple = ()

    def csv_row(self):
        return (
            f"{self.i},{self.j},{self.p1},{self.p2},{self.gap:.12g},"
            f"{self.residual_mod1:.12g},{len(self.primes_ok)}"
        )


CSV_HEADER_EDGES = "i,j,p1,p2,gap,residual_mod1,n_primes_ok"


@dataclass
class PrimeRatioGraph:
    n_vertices: int
    edges: list
    pprime_range: tuple
    ppprime_range: tuple
    geom_tol: float
    freq_tol: float

    def adjacency(self):
        A = np.zeros((self.n_vertices, self.n_vertices), dtype=np.int64)
        for e in self.edges:
            A[e.i, e.j] = 1
            A[e.j, e.i] = 1
        return A

    def adjacency_lists(self):
        adj = [[] for _ in range(self.n_vertices)]
        for e in self.edges:
            adj[e.i].append(e.j)
            adj[e.j].append(e.i)
        return adj


def _interval_gap(a1, b1, a2, b2):
    """Distance between intervals [a1, b1] and [a2, b2]; 0 when they meet."""
    return max(0.0, max(a1, a2) - min(b1, b2))


def _mod1_dist(x):
    return abs(x - round(x))


def build_graph(family, freqs, pprime_range, geom_tol=None, freq_tol=None,
                ppprime_range=None):
    """Prime-ratio graph: scan each vertex j and ordered prime pair (p1, p2),
    looking up intervals near (p2/p1) * I_j in a sorted start index.

    Distinct prime ratios with numerator and denominator below 2 P' are
    separated by at least 1/(4 P'^2), so with P'^2 <= X/(4H) a vertex pair can
    qualify through at most one ratio; a second qualifying pair raises
    InconsistencyError naming the collision.
    """
    X, H = family.X, family.H
    p_lo, p_hi = int(pprime_range[0]), int(pprime_range[1])
    if p_lo < 3:
        raise ParameterError("prime range must start at 3 or above")
    if 4 * p_lo * p_lo > X // H:
        raise ParameterError(
            f"ratio separation needs P'^2 <= X/(4H); got P'={p_lo}, X/H={X // H}"
        )
    pp = [int(p) for p in primes_in(p_lo, p_hi + 1)]
    if len(pp) < 2:
        raise ParameterError(f"fewer than two primes in [{p_lo}, {p_hi}]")
    if ppprime_range is not None:
        ppp = [int(p) for p in primes_in(ppprime_range[0], ppprime_range[1] + 1)]
        p_second = int(ppprime_range[1])
    else:
        ppp, p_second = [], None
    if geom_tol is None:
        geom_tol = 100.0 * H / (p_lo * p_second) if p_second else 100.0 * H / p_lo
    if freq_tol is None:
        freq_tol = (10.0 * p_lo * p_lo * p_second / H if p_second
                    else 10.0 * p_lo * p_lo / H)

    xs = family.starts
    order = np.argsort(xs, kind="stable")
    sorted_xs = xs[order]
    alphas = np.asarray(freqs.alphas, dtype=np.float64) % 1.0

    edges = {}
    for j in range(len(xs)):
        xj = float(xs[j])
        for p1 in pp:
            for p2 in pp:
                if p1 == p2:
                    continue
                r = p2 / p1
                lo = r * xj - geom_tol - H
                hi = r * (xj + H) + geom_tol
                s0 = np.searchsorted(sorted_xs, lo - 1, side="left")
                s1 = np.searchsorted(sorted_xs, hi + 1, side="right")
                for s in range(s0, s1):
                    i = int(order[s])
                    if i == j:
                        continue
                    gap = _interval_gap(
                        float(xs[i]), float(xs[i]) + H, r * xj, r * (xj + H)
                    )
                    if gap > geom_tol:
                        continue
                    delta = p2 * alphas[i] - p1 * alphas[j]
                    res1 = _mod1_dist(delta)
                    if res1 > freq_tol:
                        continue
                    ok = tuple(
                        p for p in ppp
                        if abs(delta - p * round(delta / p)) <= freq_tol
                    )
                    u, v = (i, j) if i < j else (j, i)
                    pu, pv = (p1, p2) if i < j else (p2, p1)
                    rec = EdgeRecord(u, v, pu, pv, float(gap), float(res1), ok)
                    prev = edges.get((u, v))
                    if prev is None:
                        edges[(u, v)] = rec
                    elif (prev.p1, prev.p2) != (pu, pv):
                        raise InconsistencyError(
                            f"vertex pair ({u}, {v}) qualifies through "
                            f"({prev.p1}, {prev.p2}) and ({pu}, {pv}); "
                            "ratios are not separated at these parameters"
                        )
    edge_list = [edges[k] for k in sorted(edges)]
    return PrimeRatioGraph(
        n_vertices=len(xs),
        edges=edge_list,
        pprime_range=(p_lo, p_hi),
        ppprime_range=tuple(ppprime_range) if ppprime_range else (),
        geom_tol=float(geom_tol),
        freq_tol=float(freq_tol),
    )


# -- exact walk counting -----------------------------------------------------

@dataclass
class WalkCountResult:
    k: int
    n_vertices: int
    n_edges: int
    walks: int  # 1^T A^k 1, exact
    lower_bound: Fraction  # N * (1^T A 1 / N)^k
    margin: Fraction

    @property
    def nonnegative(self):
        return self.margin >= 0


def walk_count(graph, k):
    """Exact 1^T A^k 1 by integer vector iteration, with Blakley-Roy margin."""
    k = int(k)
    if not 1 <= k <= 16:
        raise ParameterError("k must lie in [1, 16]")
    n = graph.n_vertices
    if n < 1 or n > 10_000:
        raise ParameterError("graph must have between 1 and 10^4 vertices")
    adj = graph.adjacency_lists()
    vec = [1] * n
    for _ in range(k):
        nxt = [0] * n
        for u in range(n):
            vu = vec[u]
            if vu:
                for w in adj[u]:
                    nxt[w] += vu
        vec = nxt
    walks = sum(vec)
    w1 = sum(len(a) for a in adj)  # 1^T A 1 = 2 |E|
    lower = Fraction(n) * Fraction(w1, n) ** k
    return WalkCountResult(
        k=k,
        n_vertices=n,
        n_edges=len(graph.edges),
        walks=walks,
        lower_bound=lower,
        margin=Fraction(walks) - lower,
    )


def complete_graph(n):
    """K_n as a PrimeRatioGraph shell (helper for exactness tests)."""
    edges = [
        EdgeRecord(i, j, 0, 0, 0.0, 0.0, ())
        for i in range(n)
        for j in range(i + 1, n)
    ]
    return PrimeRatioGraph(n, edges, (0, 0), (), 0.0, 0.0)


# -- near-equal prime products ----------------------------------------------

@dataclass
class PrimeProductCount:
    k: int
    prime_range: tuple
    n_primes: int
    window: float
    modulus: int
    count: int  # ordered 2k-tuples
    d_parameter: float  # P'^2 / (log P')^2
    bound_reference: float  # d^k / N
    fitted_constant: float


def count_prime_products(k, prime_range, C, N, q=1):
    """Count ordered 2k-tuples of primes in [P', P''] whose k-fold products
    differ by at most C * P'^k / N and agree mod q (meet in the middle)."""
    k = int(k)
    if not 1 <= k <= 4:
        raise ParameterError("k must lie in [1, 4]")
    p_lo, p_hi = int(prime_range[0]), int(prime_range[1])
    ps = primes_in(p_lo, p_hi + 1).astype(np.int64)
    if len(ps) == 0:
        raise ParameterError(f"no primes in [{p_lo}, {p_hi}]")
    if len(ps) ** k > 20_000_000:
        raise ParameterError("too many k-fold products; shrink the range or k")
    products = ps.copy()
    for _ in range(k - 1):
        products = (products[:, None] * ps[None, :]).ravel()
    window = float(C) * float(p_lo) ** k / float(N)
    q = int(q)
    res = products % q
    count = 0
    for r in range(q):
        vals = np.sort(products[res == r])
        hi_idx = np.searchsorted(vals, vals + window, side="right")
        lo_idx = np.searchsorted(vals, vals - window, side="left")
        count += int((hi_idx - lo_idx).sum())
    logp = math.log(p_lo)
    d = p_lo * p_lo / (logp * logp)
    reference = d**k / float(N)
    return PrimeProductCount(
        k=k,
        prime_range=(p_lo, p_hi),
        n_primes=len(ps),
        window=window,
        modulus=q,
        count=count,
        d_parameter=d,
        bound_reference=reference,
        fitted_constant=count / reference if reference > 0 else float("inf"),
    )


# -- mixing counts -----------------------------------------------------------

@dataclass
class MixingReport:
    n_first: int
    n_second: int
    prime_range: tuple
    geom_tol: float
    count: int
    term_product: float  # n1 n2 (H/X) (P'/log P')^2
    term_sqrt: float  # sqrt(n1 n2) (P'/log P')^2
    fitted_constant: float


def mixing_count(family_a, family_b, prime_range, geom_tol=None, X=None, H=None):
    """Count ordered quadruples (I1, I2, p1, p2) with I1 near (p2/p1) I2.

    family_a and family_b are interval lists (possibly subsets of one
    family); equal primes are allowed here, unlike graph edges.
    """
    ivs_a = list(getattr(family_a, "intervals", family_a))
    ivs_b = list(getattr(family_b, "intervals", family_b))
    if not ivs_a or not ivs_b:
        raise ParameterError("both families must be non-empty")
    H = H if H is not None else ivs_a[0].H
    X = X if X is not None else max(iv.x for iv in ivs_a + ivs_b)
    p_lo, p_hi = int(prime_range[0]), int(prime_range[1])
    pp = [int(p) for p in primes_in(p_lo, p_hi + 1)]
    if geom_tol is None:
        geom_tol = 100.0 * H / p_lo
    xs_a = np.sort(np.array([iv.x for iv in ivs_a], dtype=np.float64))
    count = 0
    for iv in ivs_b:
        x2 = float(iv.x)
        for p1 in pp:
            for p2 in pp:
                r = p2 / p1
                lo = r * x2 - geom_tol - H
                hi = r * (x2 + H) + geom_tol
                s0 = np.searchsorted(xs_a, lo - 1, side="left")
                s1 = np.searchsorted(xs_a, hi + 1, side="right")
                for s in range(s0, s1):
                    gap = _interval_gap(
                        xs_a[s], xs_a[s] + H, r * x2, r * (x2 + H)
                    )
                    if gap <= geom_tol:
                        count += 1
    n1, n2 = len(ivs_a), len(ivs_b)
    scale = (p_lo / math.log(p_lo)) ** 2
    term_product = n1 * n2 * (H / X) * scale
    term_sqrt = math.sqrt(n1 * n2) * scale
    denom = term_product + term_sqrt
    return MixingReport(
        n_first=n1,
        n_second=n2,
        prime_range=(p_lo, p_hi),
        geom_tol=float(geom_tol),
        count=count,
        term_product=term_product,
        term_sqrt=term_sqrt,
        fitted_constant=count / denom if denom > 0 else float("inf"),
    )


# -- global frequency model --------------------------------------------------

@dataclass
class ModelFit:
    T: float
    two_pi_T: float
    q: int
    score: int
    n_intervals: int
    grid_spacing: float
    t_max: float
    residues: list
    residuals: list
    passing: list
    xs: list
    cluster_center: float
    cluster_size: int
    cluster_radius: float

    def payload(self):
        return {
            "T": self.T,
            "two_pi_T": self.two_pi_T,
            "q": self.q,
            "score": self.score,
            "n_intervals": self.n_intervals,
            "grid_spacing": self.grid_spacing,
            "t_max": self.t_max,
            "residues": [int(a) for a in self.residues],
            "residuals": [float(r) for r in self.residuals],
            "passing": [bool(b) for b in self.passing],
            "xs": [int(x) for x in self.xs],
            "cluster_center": self.cluster_center,
            "cluster_size": self.cluster_size,
            "cluster_radius": self.cluster_radius,
        }


def _signed_frac(a):
    """Representative of a mod 1 in (-1/2, 1/2]."""
    f = a - np.round(a)
    return f


def _score_grid(tgrid, xs, alphas, q, H):
    """Number of intervals with || alpha - T/(2 pi x) - a/q || <= 1/(4H)."""
    tol = 1.0 / (4.0 * H)
    scores = np.zeros(len(tgrid), dtype=np.int64)
    for i in range(0, len(tgrid), 2048):
        tt = tgrid[i : i + 2048]
        delta = alphas[None, :] - tt[:, None] / (TWO_PI * xs[None, :])
        resid = np.abs(_signed_frac(delta * q)) / q
        scores[i : i + 2048] = (resid <= tol).sum(axis=1)
    return scores


def fit_frequency_model(freqs, q_max=4, rho=0.1, t_max=None,
                        cluster_radius=None, min_strength=None):
    """Fit alpha_I ~ T/(2 pi x_I) + a_I/q over a T-grid and q <= q_max.

    The grid spacing pi * min(x) / (4H) moves every prediction by at most
    1/(8H) between grid points, half the residual tolerance 1/(4H).  After
    the scan the winning (T, q) is refined by averaging per-interval exact
    T estimates over the passing set, which recovers synthetic models to
    rounding.  Ties prefer smaller q, then smaller |T|.
    """
    family = freqs.family
    X, H = family.X, family.H
    keep = np.arange(len(family.intervals))
    if min_strength is not None:
        keep = keep[np.asarray(freqs.strengths) >= min_strength]
    if len(keep) < 8:
        raise EmptyFitError(
            f"{len(keep)} intervals above strength threshold; need >= 8"
        )
    xs = family.starts.astype(np.float64)[keep]
    alphas = (np.asarray(freqs.alphas, dtype=np.float64) % 1.0)[keep]
    if t_max is None:
        t_max = X * X / H ** (2.0 - rho)
    spacing = math.pi * float(xs.min()) / (4.0 * H)
    K = int(math.ceil(t_max / spacing))
    tgrid = np.arange(-K, K + 1, dtype=np.float64) * spacing
    if len(tgrid) * len(xs) * q_max > 2_000_000_000:
        raise ParameterError("model grid too large; raise rho or lower t_max")

    best = None  # (score, q, T)
    for q in range(1, int(q_max) + 1):
        scores = _score_grid(tgrid, xs, alphas, q, H)
        top = int(scores.max())
        if best is not None and top <= best[0]:
            continue
        idx = np.nonzero(scores == top)[0]
        pick = idx[np.lexsort((tgrid[idx], np.abs(tgrid[idx])))][0]
        best = (top, q, float(tgrid[pick]))

    score0, q0, T0 = best
    if score0 == 0:
        raise EmptyFitError("no interval matches the model at any grid point")

    def localize(T):
        delta = alphas - T / (TWO_PI * xs)
        a = np.round(_signed_frac(delta) * q0)
        resid_signed = _signed_frac(delta) - a / q0
        t_hat = T + TWO_PI * xs * resid_signed
        return a.astype(np.int64) % q0, np.abs(resid_signed), t_hat

    tol = 1.0 / (4.0 * H)
    a0, r0, t_hat0 = localize(T0)
    passing0 = r0 <= tol
    T_star = float(t_hat0[passing0].mean()) if passing0.any() else T0
    residues, residuals, t_hat = localize(T_star)
    passing = residuals <= tol

    if cluster_radius is None:
        cluster_radius = spacing
    order = np.argsort(t_hat, kind="stable")
    th = t_hat[order]
    c_size, c_center = 0, T_star
    j = 0
    for i in range(len(th)):
        while th[i] - th[j] > 2.0 * cluster_radius:
            j += 1
        if i - j + 1 > c_size:
            c_size = i - j + 1
            c_center = float(th[j : i + 1].mean())

    return ModelFit(
        T=T_star,
        two_pi_T=TWO_PI * T_star,
        q=int(q0),
        score=int(passing.sum()),
        n_intervals=len(xs),
        grid_spacing=spacing,
        t_max=float(t_max),
        residues=list(residues),
        residuals=list(residuals),
        passing=list(passing),
        xs=[int(x) for x in xs],
        cluster_center=c_center,
        cluster_size=int(c_size),
        cluster_radius=float(cluster_radius),
    )
