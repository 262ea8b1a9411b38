"""Short sums and certified sup scans against brute-force oracles."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from expsumlab import (
    CertificationError,
    FunctionSpec,
    Interval,
    ParameterError,
    completion_search,
    dense_grid_sup,
    extract_frequencies,
    logpoint_mean_square,
    short_sum,
    sup_alpha,
    sup_alpha_coeffs,
)
from expsumlab.specs import SpecEvaluator


def short_sum_oracle(spec, interval, alpha):
    ev = SpecEvaluator(spec)
    vals = np.asarray(ev.values(interval.lo, interval.hi), dtype=np.complex128)
    n = np.arange(interval.lo, interval.hi, dtype=np.float64)
    return complex((vals * np.exp(-2j * np.pi * alpha * n)).sum())


SPECS = [
    FunctionSpec.liouville(),
    FunctionSpec.one(),
    FunctionSpec.archimedean(4.0),
    FunctionSpec.char_twist(4, 1),
    FunctionSpec.random_pm1(5),
]


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.label())
def test_short_sum_matches_direct_oracle(spec):
    iv = Interval(977, 64)
    for alpha in (0.0, 0.125, 1 / 3, 0.9999, 0.61803398875):
        got = short_sum(spec, iv, alpha)
        want = short_sum_oracle(spec, iv, alpha)
        assert got == pytest.approx(want, abs=1e-9 * iv.H)


def test_short_sum_alpha_periodic():
    iv = Interval(500, 32)
    lam = FunctionSpec.liouville()
    a = short_sum(lam, iv, 0.37)
    b = short_sum(lam, iv, 1.37)
    assert a == pytest.approx(b, abs=1e-9)


def test_short_sum_precision_at_large_x():
    # exact rational phase reduction: no catastrophic loss near 2e9
    iv = Interval(1_999_999_000, 16)
    one = FunctionSpec.one()
    alpha = 1 / 7
    got = short_sum(one, iv, alpha)
    n = np.arange(iv.lo, iv.hi, dtype=object)
    want = sum(complex(np.exp(-2j * np.pi * float((alpha * int(k)) % 1.0)))
               for k in n)
    assert got == pytest.approx(want, abs=1e-6)


@given(seed=st.integers(min_value=0, max_value=10_000))
@settings(max_examples=15, deadline=None)
def test_certificate_dominates_dense_grid(seed):
    rng = np.random.default_rng(seed)
    coeffs = rng.standard_normal(32) + 1j * rng.standard_normal(32)
    coeffs /= np.max(np.abs(coeffs))
    tau = 0.05
    alpha, value, bound, L, n_evals = sup_alpha_coeffs(coeffs, tau)
    # brute-force oracle on a fine grid
    G = 1 << 14
    buf = np.zeros(G, dtype=np.complex128)
    buf[1:33] = coeffs
    grid_max = float(np.abs(np.fft.fft(buf)).max())
    H = len(coeffs)
    assert value <= bound + 1e-9
    assert grid_max <= bound + 1e-9
    assert value >= grid_max - tau * H - 1e-9


def test_sup_alpha_certificate_fields():
    lam = FunctionSpec.liouville()
    iv = Interval(2000, 64)
    cert = sup_alpha(lam, iv, 0.02)
    assert cert.interval == iv
    assert 0.0 <= cert.alpha_star < 1.0
    assert cert.value <= cert.sup_bound
    assert cert.sup_bound == pytest.approx(cert.value + 0.02 * 64)
    # the witness is reproducible through the public short_sum path
    assert abs(short_sum(lam, iv, cert.alpha_star)) == pytest.approx(
        cert.value, rel=1e-9
    )


def test_sup_alpha_against_dense_oracle_many_intervals():
    lam = FunctionSpec.liouville()
    for x in (1000, 5000, 25_000, 100_000):
        iv = Interval(x, 128)
        cert = sup_alpha(lam, iv, 0.01)
        _, oracle = dense_grid_sup(lam, iv, 1e-3 / 128)
        assert cert.value >= oracle - 0.01 * 128 - 1e-9
        assert cert.sup_bound >= oracle - 1e-9


def test_sup_unimodular_constant_invariance():
    rng = np.random.default_rng(7)
    coeffs = rng.standard_normal(24) + 1j * rng.standard_normal(24)
    coeffs /= np.max(np.abs(coeffs))
    _, v1, b1, _, _ = sup_alpha_coeffs(coeffs, 0.02)
    phase = np.exp(0.7j)
    _, v2, b2, _, _ = sup_alpha_coeffs(coeffs * phase, 0.02)
    assert v1 == pytest.approx(v2, rel=1e-9)
    assert b1 == pytest.approx(b2, rel=1e-6)


def test_one_spec_sup_is_H_at_zero():
    one = FunctionSpec.one()
    iv = Interval(10_000, 64)
    cert = sup_alpha(one, iv, 0.01)
    assert cert.value == pytest.approx(64.0, rel=1e-9)
    assert min(cert.alpha_star, 1 - cert.alpha_star) < 1e-3


def test_linear_phase_peak_is_at_beta():
    beta = 0.3125  # exactly on any dyadic grid
    spec = FunctionSpec.linear_phase(beta)
    iv = Interval(4096, 64)
    cert = sup_alpha(spec, iv, 0.01)
    assert cert.value == pytest.approx(64.0, rel=1e-6)
    assert min(abs(cert.alpha_star - beta), 1 - abs(cert.alpha_star - beta)) < 1e-3


def test_budget_cap_raises_certification_error():
    rng = np.random.default_rng(3)
    coeffs = rng.standard_normal(512) + 0j
    coeffs /= np.max(np.abs(coeffs))
    with pytest.raises(CertificationError) as err:
        sup_alpha_coeffs(coeffs, 1e-9, max_evaluations=10_000)
    assert err.value.best_value <= err.value.upper_bound


def test_extract_frequencies_separated_and_sorted():
    lam = FunctionSpec.liouville()
    iv = Interval(50_000, 640)
    picks = extract_frequencies(lam, iv, eta=0.0, max_freqs=6)
    H = 64
    assert len(picks) == 6
    strengths = [s for _, s in picks]
    assert strengths == sorted(strengths, reverse=True)
    for i, (g1, _) in enumerate(picks):
        for g2, _ in picks[i + 1:]:
            d = abs(g1 - g2)
            assert min(d, 1 - d) > 1.0 / H - 1e-12


def test_extract_frequencies_finds_planted_peak():
    beta = 0.25
    spec = FunctionSpec.linear_phase(beta)
    iv = Interval(9999, 640)
    picks = extract_frequencies(spec, iv, eta=0.5, max_freqs=3)
    assert picks
    g0, s0 = picks[0]
    assert min(abs(g0 - beta), 1 - abs(g0 - beta)) < 1e-6
    assert s0 == pytest.approx(640.0, rel=1e-9)


def test_completion_search_recovers_shift():
    beta = 0.171875
    theta_true = 1.0 / 2048
    spec = FunctionSpec.linear_phase(beta + theta_true)
    outer = Interval(1024, 512)
    inner = Interval(1024, 256)  # |S_inner(beta)| ~ 256 > eta * 512
    res = completion_search(spec, inner, outer, alpha=beta, eta=0.3)
    assert res.meets_bound
    assert res.theta == pytest.approx(theta_true, abs=2 * res.grid_spacing)
    assert res.value == pytest.approx(512.0, rel=1e-6)


def test_completion_search_preconditions():
    lam = FunctionSpec.liouville()
    outer = Interval(1000, 128)
    inner = Interval(1000, 32)
    with pytest.raises(ParameterError):
        completion_search(lam, outer, inner, 0.0, 0.4)  # not nested
    with pytest.raises(ParameterError):
        completion_search(lam, inner, outer, 0.0, 0.7)  # eta >= 0.5


def test_logpoint_mean_square_single_point():
    # one point: integrand is 1, integral = 2T
    out = logpoint_mean_square([100.0], T=3.0)
    assert out == pytest.approx(6.0, rel=1e-6)


def test_logpoint_mean_square_two_points_closed_form():
    # |e^{it a} + e^{it b}|^2 = 2 + 2 cos(t (a-b));
    # integral over |t| <= T: 4T + 4 sin(T d) / d with d = log x1 - log x2
    x1, x2 = 40.0, 90.0
    T = 2.0
    d = math.log(x1) - math.log(x2)
    want = 4 * T + 4 * math.sin(T * d) / d
    out = logpoint_mean_square([x1, x2], T=T, spacing=1e-3)
    assert out == pytest.approx(want, rel=1e-6)


def test_interval_validation():
    with pytest.raises(ParameterError):
        Interval(100, 4)  # too short
    with pytest.raises(ParameterError):
        Interval(-5, 64)
    iv = Interval(10, 16)
    assert iv.lo == 11 and iv.hi == 27
    assert Interval(10, 64).contains(Interval(20, 16))
    assert not Interval(10, 16).contains(Interval(10, 64))
