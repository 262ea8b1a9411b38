"""The demonstration battery: thirteen checks, each an exact identity, a
certified-oracle comparison, a theorem-backed inequality, or a trend check.

Each criterion function returns a CriterionResult and is deterministic given
its hard-coded seeds.  The pytest acceptance suite asserts `passed` per
criterion; the `suite` CLI command runs them in order and prints one
PASS/FAIL line each.
"""

from __future__ import annotations

import hashlib
import math
import time
from dataclasses import dataclass

import numpy as np

from .correlations import (
    SequenceSpec,
    averaged_chowla2,
    triple_direct,
    triple_report,
)
from .expsum import Interval, dense_grid_sup, sup_alpha
from .pretend import pretentious_distance
from .proofgraph import (
    assign_frequencies,
    build_graph,
    complete_graph,
    count_prime_products,
    fit_frequency_model,
    msd_check,
    synthetic_assignment,
    walk_count,
)
from .reports import payload_text
from .sieve import sieve_range
from .specs import FunctionSpec, get_evaluator
from .uniformity import archimedean_demo, build_family, uniformity_statistic


@dataclass
class CriterionResult:
    index: int
    name: str
    passed: bool
    detail: str
    elapsed: float

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return (
            f"[criterion {self.index:02d}] {status} {self.name}: "
            f"{self.detail} ({self.elapsed:.1f}s)"
        )


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def criterion_01(threads=1):
    """Spectral path equals direct path within 1e-6 relative."""
    lam, mu = FunctionSpec.liouville(), FunctionSpec.moebius()
    one, mang = SequenceSpec.one(), SequenceSpec.mangoldt()
    cases = [(lam, one, one), (lam, mang, mang), (mu, mang, one)]

    def run():
        gaps = []
        for f, a, b in cases:
            rep = triple_report(f, a, b, X=10_000, H=32, threads=threads)
            gaps.append(rep.rel_gap)
        return gaps

    gaps, dt = _timed(run)
    ok = all(g <= 1e-6 for g in gaps) and dt < 10.0
    detail = "rel gaps " + ", ".join(f"{g:.2e}" for g in gaps)
    return CriterionResult(1, "spectral/direct identity", ok, detail, dt)


def criterion_02(threads=1):
    """All-ones triple is exactly H*X."""
    one_f, one_s = FunctionSpec.one(), SequenceSpec.one()

    def run():
        return triple_direct(one_f, one_s, one_s, X=1000, H=16)

    rep, dt = _timed(run)
    ok = rep.value_direct == 16000
    return CriterionResult(
        2, "Fejér normalization", ok, f"value {rep.value_direct.real!r}", dt
    )


def criterion_03(threads=1):
    """Archimedean phases keep the statistic near 1 in the stated t-range."""
    X, H = 1_000_000, 1000

    def run():
        r1 = archimedean_demo(0.01 * X * X / (H * H), X, H, seed=3, threads=threads)
        r2 = archimedean_demo(0.1 * X * X / (H * H), X, H, seed=3, threads=threads)
        return r1, r2

    (r1, r2), dt = _timed(run)
    ok = r1.U >= 0.9 and r2.U >= 0.8 and dt < 120.0
    detail = f"U(0.01 X^2/H^2) = {r1.U:.4f}, U(0.1 X^2/H^2) = {r2.U:.4f}"
    return CriterionResult(3, "pretentious lower bound demo", ok, detail, dt)


def criterion_04(threads=1):
    """Uniformity statistic decays in H and sits well under the n^{it} level."""
    lam = FunctionSpec.liouville()
    X, M, tau, seed = 1_000_000, 256, 0.01, 1
    t = 0.01 * X * X / (1000 * 1000)

    def run():
        u_wide = uniformity_statistic(lam, X, 2048, tau, seed=seed, size=M,
                                      threads=threads)
        u_narrow = uniformity_statistic(lam, X, 32, tau, seed=seed, size=M,
                                        threads=threads)
        u_lam = uniformity_statistic(lam, X, 1000, tau, seed=seed, size=M,
                                     threads=threads)
        u_arch = uniformity_statistic(FunctionSpec.archimedean(t), X, 1000,
                                      tau, seed=seed, size=M, threads=threads)
        return u_wide, u_narrow, u_lam, u_arch

    (u_wide, u_narrow, u_lam, u_arch), dt = _timed(run)
    ok = u_wide.U < u_narrow.U and u_lam.U <= 0.5 * u_arch.U
    detail = (
        f"U(H=2048) = {u_wide.U:.4f} < U(H=32) = {u_narrow.U:.4f}; "
        f"U(lam, H=1e3) = {u_lam.U:.4f} vs 0.5 U(n^it) = {0.5 * u_arch.U:.4f}"
    )
    return CriterionResult(4, "uniformity decay trend", ok, detail, dt)


def criterion_05(threads=1):
    """Certified sup matches a dense-grid oracle on 100 seeded intervals."""
    lam = FunctionSpec.liouville()
    H = 256
    rng = np.random.default_rng(55)
    xs = rng.integers(100_000, 2_000_000 - H, size=100)

    def run():
        ev = get_evaluator(lam, threads=threads)
        ev.ensure(int(xs.min()) + 1, int(xs.max()) + H + 1)
        worst = 0.0
        for x in xs:
            iv = Interval(int(x), H)
            cert = sup_alpha(ev, iv, 0.01)
            _, oracle = dense_grid_sup(ev, iv, 1e-3 / H)
            worst = max(worst, abs(cert.value - oracle))
        return worst

    worst, dt = _timed(run)
    ok = worst <= 0.02 * H
    detail = f"max |certified - oracle| = {worst:.3f} vs {0.02 * H:.2f}"
    return CriterionResult(5, "sup certification vs dense oracle", ok, detail, dt)


def criterion_06(threads=1):
    """Mean-scales-down bound, plus exactness for the zero function."""
    lam = FunctionSpec.liouville()
    zero = FunctionSpec.custom_primes((), default=0.0)
    H = 1000
    rng = np.random.default_rng(66)
    xs = rng.integers(1_000_000, 2_000_000, size=100)

    def run():
        ev = get_evaluator(lam, threads=threads)
        ev.ensure(int(xs.min()) + 1, int(xs.max()) + H + 1)
        worst = max(msd_check(lam, int(x), H).lhs_over_h2 for x in xs)
        zero_lhs = msd_check(zero, int(xs[0]), H).lhs
        return worst, zero_lhs

    (worst, zero_lhs), dt = _timed(run)
    ok = worst <= 10.0 and zero_lhs == 0.0
    detail = f"max lhs/H^2 = {worst:.3f}; zero-function lhs = {zero_lhs!r}"
    return CriterionResult(6, "mean scales down", ok, detail, dt)


def criterion_07(threads=1):
    """Blakley-Roy margin is a nonnegative exact rational on every graph."""
    lam = FunctionSpec.liouville()
    ks = (2, 4, 6)

    def run():
        margins = []
        k5 = complete_graph(5)
        for k in ks:
            margins.append(walk_count(k5, k).margin)
        k5_exact = all(m == 0 for m in margins)
        n_edges = 0
        worst = None
        for s in range(20):
            fam = build_family(2_000_000, 64, "strict", seed=100 + s, size=32)
            freqs = assign_frequencies(lam, fam, tau=0.05, threads=threads)
            graph = build_graph(fam, freqs, (11, 22))
            n_edges += len(graph.edges)
            for k in ks:
                m = walk_count(graph, k).margin
                worst = m if worst is None else min(worst, m)
        return k5_exact, worst, n_edges

    (k5_exact, worst, n_edges), dt = _timed(run)
    ok = k5_exact and worst >= 0
    detail = f"K5 margins exactly 0; min seeded margin {worst} ({n_edges} edges)"
    return CriterionResult(7, "Blakley-Roy margins", ok, detail, dt)


def criterion_08(threads=1):
    """Prime-product counts scale like d^k/N with a uniform constant."""

    def run():
        cstar = 0.0
        pairs_ok = True
        for P in (50, 100, 200):
            c1 = count_prime_products(2, (P, 2 * P), C=1.0, N=P, q=1)
            c3 = count_prime_products(2, (P, 2 * P), C=1.0, N=P, q=3)
            cstar = max(cstar, c1.fitted_constant)
            pairs_ok = pairs_ok and c3.count <= c1.count
        return cstar, pairs_ok

    (cstar, pairs_ok), dt = _timed(run)
    ok = cstar <= 100.0 and pairs_ok
    detail = f"C* = {cstar:.3f}; q=3 counts <= q=1 counts: {pairs_ok}"
    return CriterionResult(8, "prime-product scaling", ok, detail, dt)


def criterion_09(threads=1):
    """Pretentious distance hits its closed-form and is monotone in Q."""
    X, tol, t_max = 10_000, 0.005, 10.0

    def run():
        d_char = pretentious_distance(
            FunctionSpec.char_twist(3, 1), X, 3, t_max=t_max, tol=tol
        ).distance
        d_arch = pretentious_distance(
            FunctionSpec.archimedean(5.0), X, 1, t_max=t_max, tol=tol
        ).distance
        lam = FunctionSpec.liouville()
        ds = [
            pretentious_distance(lam, X, Q, t_max=t_max, tol=tol).distance
            for Q in (1, 3, 4, 5)
        ]
        return d_char, d_arch, ds

    (d_char, d_arch, ds), dt = _timed(run)
    mono = all(b <= a for a, b in zip(ds, ds[1:]))
    ok = abs(d_char - 3 ** (-0.5)) <= 0.01 and d_arch <= 0.05 and mono
    detail = (
        f"D(chi_3 twist) = {d_char:.4f} (target {3 ** (-0.5):.4f}); "
        f"D(n^i5) = {d_arch:.4f}; liouville D over Q: "
        + ", ".join(f"{d:.4f}" for d in ds)
    )
    return CriterionResult(9, "distance exactness", ok, detail, dt)


def criterion_10(threads=1):
    """Averaged two-point statistic is monotone in H and small at H=1000."""
    lam = FunctionSpec.liouville()

    def run():
        return [averaged_chowla2(lam, 1_000_000, H, threads=threads).statistic
                for H in (10, 100, 1000)]

    stats, dt = _timed(run)
    mono = all(b <= a for a, b in zip(stats, stats[1:]))
    ok = mono and stats[-1] <= 0.05
    detail = "statistic over H in (10,100,1000): " + ", ".join(
        f"{s:.5f}" for s in stats
    )
    return CriterionResult(10, "averaged two-point correlation", ok, detail, dt)


def criterion_11(threads=1):
    """Sign cancellation: the Liouville-weighted triple is small against the
    unsigned baseline."""
    lam, one_f = FunctionSpec.liouville(), FunctionSpec.one()
    mang = SequenceSpec.mangoldt()

    def run():
        t_lam = triple_direct(lam, mang, mang, 1_000_000, 100, threads=threads)
        t_one = triple_direct(one_f, mang, mang, 1_000_000, 100, threads=threads)
        return abs(t_lam.value), t_one.value.real

    (lhs, base), dt = _timed(run)
    ok = lhs <= base / 3.0
    detail = f"|triple(lam,L,L)| = {lhs:.4g} vs baseline/3 = {base / 3.0:.4g}"
    return CriterionResult(11, "weighted-triple cancellation", ok, detail, dt)


def criterion_12(threads=1):
    """Frequency-model fit recovers archimedean and synthetic models."""
    X, H = 1_000_000, 1000
    t0 = 0.05 * X * X / (H * H)

    def run():
        fam = build_family(X, H, "stratified", seed=12, size=64)
        freqs = assign_frequencies(FunctionSpec.archimedean(t0), fam,
                                   tau=0.01, threads=threads)
        fit = fit_frequency_model(freqs, q_max=4, rho=0.1)
        sfam = build_family(X, H, "stratified", seed=13, size=64)
        rng = np.random.default_rng(13)
        residues = rng.integers(0, 3, size=64)
        sfreqs = synthetic_assignment(sfam, T=12345.6, q=3, residues=residues)
        sfit = fit_frequency_model(sfreqs, q_max=4, rho=0.1)
        return fit, sfit

    (fit, sfit), dt = _timed(run)
    arch_ok = (
        abs(fit.T - t0) <= fit.grid_spacing and fit.score >= 0.9 * fit.n_intervals
    )
    synth_ok = (
        sfit.q == 3
        and abs(sfit.T - 12345.6) <= 1e-6 * 12345.6
        and sfit.score == sfit.n_intervals
    )
    ok = arch_ok and synth_ok
    detail = (
        f"arch fit T = {fit.T:.1f} (t0 = {t0:.1f}, spacing {fit.grid_spacing:.1f}, "
        f"score {fit.score}/{fit.n_intervals}); synthetic T = {sfit.T:.4f}, "
        f"q = {sfit.q}"
    )
    return CriterionResult(12, "model recovery", ok, detail, dt)


def criterion_13(threads=8):
    """Thread counts 1 and `threads` produce byte-identical payloads."""
    threads_hi = max(2, threads)
    lam = FunctionSpec.liouville()

    def run():
        texts = []
        for th in (1, threads_hi):
            u = uniformity_statistic(lam, 200_000, 64, 0.01, seed=7, size=64,
                                     threads=th)
            t = triple_report(lam, SequenceSpec.mangoldt(), SequenceSpec.one(),
                              X=50_000, H=32, threads=th)
            table = sieve_range("liouville", 1, 9_000_000, threads=th)
            digest = hashlib.sha256(table.values.tobytes()).hexdigest()
            texts.append(payload_text({"u": u, "t": t, "sieve": digest}))
        return texts

    (t1, t8), dt = _timed(run)
    ok = t1 == t8
    return CriterionResult(
        13, "thread-count determinism", ok,
        f"payloads equal across threads 1 and {threads_hi}: {ok}", dt,
    )


ALL_CRITERIA = [
    criterion_01, criterion_02, criterion_03, criterion_04, criterion_05,
    criterion_06, criterion_07, criterion_08, criterion_09, criterion_10,
    criterion_11, criterion_12, criterion_13,
]


def run_battery(threads=1, emit=print):
    """Run all criteria in order; returns the list of results."""
    results = []
    for fn in ALL_CRITERIA:
        res = fn(threads=threads)
        results.append(res)
        if emit:
            emit(res.line())
    return results
