"""Fejér-weighted correlations: spectral path vs direct shifts, closed forms."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from expsumlab import (
    BudgetError,
    FunctionSpec,
    ParameterError,
    SequenceSpec,
    averaged_chowla2,
    chowla2_one_closed_form,
    cs_chain_check,
    l3_bound_check,
    sieve_range,
    triple_direct,
    triple_report,
    triple_spectral,
    window_triple,
)
from expsumlab.specs import SpecEvaluator


def triple_oracle(f, a, b, X, H):
    """Literal definition: sum_h (1 - |h|/H) sum_{n <= X} f(n) a(n+h) b(n+2h)."""
    fv = SpecEvaluator(f).values(1, X + 1)
    a_ = a if isinstance(a, SequenceSpec) else SequenceSpec.bounded(a)
    b_ = b if isinstance(b, SequenceSpec) else SequenceSpec.bounded(b)
    total = 0.0 + 0.0j
    for h in range(-H, H + 1):
        w = 1.0 - abs(h) / H
        av = a_.values(1 + h, X + h + 1)
        bv = b_.values(1 + 2 * h, X + 2 * h + 1)
        total += w * (fv * av * bv).sum()
    return complex(total)


def window_oracle(fv, av, bv):
    W = len(fv)
    total = 0.0 + 0.0j
    for w in range(W):
        for u in range(W):
            v = 2 * w - u
            if 0 <= v < W:
                total += fv[u] * bv[v] * av[w]
    return complex(total)


def test_window_triple_matches_quadratic_oracle():
    rng = np.random.default_rng(1)
    for W in (1, 2, 3, 8, 17):
        fv = rng.standard_normal(W) + 1j * rng.standard_normal(W)
        av = rng.standard_normal(W) + 1j * rng.standard_normal(W)
        bv = rng.standard_normal(W) + 1j * rng.standard_normal(W)
        got = window_triple(fv, av, bv)
        want = window_oracle(fv, av, bv)
        assert got == pytest.approx(want, abs=1e-9 * W)


@pytest.mark.parametrize("fa", [
    ("one", "one", "one"),
    ("liouville", "one", "one"),
    ("liouville", "mangoldt", "mangoldt"),
    ("moebius", "one", "mangoldt"),
])
def test_direct_matches_literal_definition(fa):
    fname, aname, bname = fa
    f = getattr(FunctionSpec, fname)()
    a = SequenceSpec.one() if aname == "one" else SequenceSpec.mangoldt()
    b = SequenceSpec.one() if bname == "one" else SequenceSpec.mangoldt()
    X, H = 500, 16
    rep = triple_direct(f, a, b, X, H)
    want = triple_oracle(f, a, b, X, H)
    assert rep.value_direct == pytest.approx(want, rel=1e-12, abs=1e-9)


@given(seed=st.integers(min_value=0, max_value=10_000),
       X=st.integers(min_value=2, max_value=300),
       H=st.integers(min_value=1, max_value=40))
@settings(max_examples=30, deadline=None)
def test_spectral_equals_direct_on_random_tables(seed, X, H):
    rng = np.random.default_rng(seed)
    lo = 1 - 2 * H
    span = X + 4 * H + 1
    ta = rng.uniform(-1, 1, span) + 1j * rng.uniform(-1, 1, span)
    tb = rng.uniform(-1, 1, span) + 1j * rng.uniform(-1, 1, span)
    a = SequenceSpec.from_table(ta, start=lo)
    b = SequenceSpec.from_table(tb, start=lo)
    f = FunctionSpec.random_pm1(seed)
    d = triple_direct(f, a, b, X, H).value_direct
    s = triple_spectral(f, a, b, X, H).value_spectral
    assert s == pytest.approx(d, rel=1e-9, abs=1e-9 * X * H)


def test_one_triple_is_HX():
    one = FunctionSpec.one()
    seq = SequenceSpec.one()
    for X, H in ((10, 1), (100, 7), (1000, 16), (357, 33)):
        rep = triple_report(one, seq, seq, X, H)
        assert rep.value_direct == pytest.approx(H * X, rel=1e-12)
        assert rep.value_spectral == pytest.approx(H * X, rel=1e-12)
        assert rep.normalized == pytest.approx(1.0, rel=1e-12)
    # with dyadic Fejer weights the direct path is exact, not just close
    assert triple_direct(one, seq, seq, 1000, 16).value_direct == 16_000


def test_H_equals_one_collapses_to_plain_sum():
    lam = FunctionSpec.liouville()
    seq = SequenceSpec.mangoldt()
    X = 400
    rep = triple_direct(lam, seq, seq, X, 1)
    fv = SpecEvaluator(lam).values(1, X + 1)
    mv = seq.values(1, X + 1)
    want = (fv * mv * mv).sum()
    assert rep.value_direct == pytest.approx(complex(want), rel=1e-12)


def test_conjugation_symmetry():
    # real f and real a, b: the triple is real
    lam = FunctionSpec.liouville()
    rep = triple_report(lam, SequenceSpec.one(), SequenceSpec.mangoldt(),
                        2000, 25)
    assert abs(complex(rep.value_direct).imag) < 1e-9
    assert rep.rel_gap <= 1e-12


def test_direct_budget_error():
    with pytest.raises(BudgetError):
        triple_direct(FunctionSpec.one(), SequenceSpec.one(),
                      SequenceSpec.one(), 10**7, 10**4)


def test_report_normalizations():
    lam = FunctionSpec.liouville()
    rep = triple_report(lam, SequenceSpec.mangoldt(), SequenceSpec.one(),
                        1000, 10)
    assert rep.normalized == pytest.approx(rep.value.real / 10_000, rel=1e-12)
    assert rep.normalized_log == pytest.approx(
        rep.normalized / math.log(1000), rel=1e-12
    )


# -- averaged two-point correlation ---------------------------------------------


def chowla2_oracle(f, X, H):
    ev = SpecEvaluator(f)
    b = np.asarray(ev.values(1, X + H + 1), dtype=np.complex128)
    a = b[:X]
    total = 0.0
    for h in range(-H, H + 1):
        lo = max(0, -h)
        r = sum(a[n] * np.conj(b[n + h]) for n in range(lo, X)
                if 0 <= n + h < X + H)
        total += abs(r)
    return total / (H * X)


@pytest.mark.parametrize("spec", [
    FunctionSpec.one(),
    FunctionSpec.liouville(),
    FunctionSpec.random_pm1(3),
    FunctionSpec.linear_phase(0.3),
])
def test_chowla2_matches_direct_oracle(spec):
    X, H = 300, 12
    rep = averaged_chowla2(spec, X, H)
    want = chowla2_oracle(spec, X, H)
    assert rep.statistic == pytest.approx(want, rel=1e-10)


def test_chowla2_one_closed_form_exact():
    for X, H in ((100, 5), (1000, 30), (4096, 64)):
        rep = averaged_chowla2(FunctionSpec.one(), X, H)
        want = chowla2_one_closed_form(X, H)
        assert rep.statistic == pytest.approx(want, rel=1e-12)


def test_chowla2_linear_phase_equals_one():
    # |r(h)| for e(beta n) equals the overlap count, exactly as for f = 1
    X, H = 2000, 40
    got = averaged_chowla2(FunctionSpec.linear_phase(0.237), X, H).statistic
    want = chowla2_one_closed_form(X, H)
    assert got == pytest.approx(want, rel=1e-9)


def test_chowla2_r0_is_squarefree_count_for_moebius():
    X, H = 5000, 10
    rep = averaged_chowla2(FunctionSpec.moebius(), X, H)
    mu = sieve_range("moebius", 1, X + 1).values
    assert rep.r0_abs == pytest.approx(float((mu != 0).sum()), rel=1e-12)


def test_chowla2_validation():
    with pytest.raises(ParameterError):
        averaged_chowla2(FunctionSpec.one(), 100, 101)
    with pytest.raises(BudgetError):
        averaged_chowla2(FunctionSpec.one(), 2 * 10**8, 10)


# -- cube integral and chain ------------------------------------------------------


def test_l3_single_point_indicator():
    # a supported at one point: |S| = 1 everywhere, integral 1, ratio 1/H^2
    x, H = 1000, 32
    table = np.zeros(2 * H)
    table[5] = 1.0
    a = SequenceSpec.from_table(table, start=x + 1)
    rep = l3_bound_check(a, x, H)
    assert rep.integral == pytest.approx(1.0, rel=1e-12)
    assert rep.ratio == pytest.approx(1.0 / H**2, rel=1e-12)
    assert rep.grid == 16 * H


def test_l3_constant_window():
    # a = 1 on the window of length 2H: the Dirichlet-kernel cube integral
    # grows like c * (2H)^2 with c ~ 0.77, so ratio -> 4c ~ 3.08
    rep = l3_bound_check(SequenceSpec.one(), 10_000, 256)
    assert 2.5 < rep.ratio < 3.5


def test_l3_mangoldt_is_bounded_by_constant():
    rep = l3_bound_check(SequenceSpec.mangoldt(), 100_000, 1000)
    assert rep.ratio <= 20.0


def test_cs_chain_holds_for_liouville():
    rep = cs_chain_check(FunctionSpec.liouville(), SequenceSpec.one(),
                         SequenceSpec.one(), 20_000, 64)
    assert rep.holds
    assert rep.triple_abs <= rep.bound
    assert rep.sup_integral > 0


# -- sequence specs ----------------------------------------------------------------


def test_sequence_one_covers_all_integers():
    one = SequenceSpec.one()
    assert np.all(one.values(-10, 10) == 1.0)


def test_sequence_mangoldt_vanishes_below_two():
    m = SequenceSpec.mangoldt()
    vals = m.values(-5, 6)
    assert np.all(vals[:7] == 0.0)  # n = -5 .. 1
    assert vals[7] == pytest.approx(math.log(2))  # n = 2


def test_sequence_bounded_vanishes_at_nonpositive():
    s = SequenceSpec.bounded(FunctionSpec.liouville())
    vals = s.values(-3, 4)
    assert np.all(vals[:4] == 0.0)  # n = -3 .. 0
    assert vals[4] == 1.0  # lambda(1)


def test_sequence_table_zero_outside():
    t = SequenceSpec.from_table([1.0, 2.0, 3.0], start=5)
    vals = t.values(3, 10)
    assert list(vals) == [0.0, 0.0, 1.0, 2.0, 3.0, 0.0, 0.0]


def test_sequence_labels():
    assert SequenceSpec.one().label() == "one"
    assert SequenceSpec.mangoldt().label() == "mangoldt"
    assert "liouville" in SequenceSpec.bounded(FunctionSpec.liouville()).label()
