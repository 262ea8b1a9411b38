"""Interval families and family-averaged uniformity statistics."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from expsumlab import (
    FunctionSpec,
    Interval,
    IntervalFamily,
    ParameterError,
    build_family,
    fixed_alpha_statistic,
    rational_candidates,
    short_sum,
    strict_slot_range,
    sup_alpha,
    uniformity_statistic,
)


@given(seed=st.integers(min_value=0, max_value=10_000),
       size=st.integers(min_value=1, max_value=12))
@settings(max_examples=20, deadline=None)
def test_strict_family_invariants(seed, size):
    X, H = 10_000_000, 64
    fam = build_family(X, H, "strict", seed=seed, size=size)
    starts = sorted(iv.x for iv in fam.intervals)
    assert len(starts) == size
    for a, b in zip(starts, starts[1:]):
        assert b - a >= 500 * H
    for iv in fam.intervals:
        assert X // 10 <= iv.x and iv.x + H <= 10 * X
        assert (iv.x - fam.offset) % H == 0
        assert ((iv.x - fam.offset) // H) % 500 == fam.slot


@given(seed=st.integers(min_value=0, max_value=10_000),
       size=st.integers(min_value=1, max_value=64))
@settings(max_examples=20, deadline=None)
def test_stratified_family_invariants(seed, size):
    X, H = 100_000, 32
    fam = build_family(X, H, "stratified", seed=seed, size=size)
    assert len(fam.intervals) == size
    starts = [iv.x for iv in fam.intervals]
    assert starts == sorted(starts)
    for a, b in zip(starts, starts[1:]):
        assert b - a >= H  # pairwise disjoint
    for iv in fam.intervals:
        assert X // 10 <= iv.x and iv.x + H <= 10 * X


def test_family_determinism_and_seed_sensitivity():
    a = build_family(1_000_000, 100, "strict", seed=4, size=8)
    b = build_family(1_000_000, 100, "strict", seed=4, size=8)
    c = build_family(1_000_000, 100, "strict", seed=5, size=8)
    assert [iv.x for iv in a.intervals] == [iv.x for iv in b.intervals]
    assert [iv.x for iv in a.intervals] != [iv.x for iv in c.intervals]


def test_dense_family_is_consecutive():
    fam = build_family(100_000, 50, "dense", size=10)
    assert [iv.x for iv in fam.intervals] == [100_000 + 50 * i for i in range(10)]


def test_strict_capacity_and_validation():
    X, H = 10_000_000, 1000
    l_min, l_max = strict_slot_range(X, H, 0, 0)
    cap = l_max - l_min + 1
    assert cap >= 1
    with pytest.raises(ParameterError):
        build_family(X, H, "strict", seed=1, size=cap + 1)
    with pytest.raises(ParameterError):
        build_family(1_000_000, 1000, "strict", seed=1)  # H > X / 10^4
    with pytest.raises(ParameterError):
        build_family(X, H, "strict")  # seed required
    with pytest.raises(ParameterError):
        build_family(X, H, "stratified")  # seed required
    with pytest.raises(ParameterError):
        build_family(X, H, "nope", seed=1)


def test_family_post_validation():
    with pytest.raises(ParameterError):
        IntervalFamily(1000, 16, "dense", [Interval(50_000, 16)])
    with pytest.raises(ParameterError):
        IntervalFamily(
            100_000, 16, "strict",
            [Interval(50_000, 16), Interval(50_016, 16)],
        )


def test_uniformity_requires_seed():
    with pytest.raises(ParameterError):
        uniformity_statistic(FunctionSpec.one(), 100_000, 32)


def test_uniformity_one_is_exactly_one():
    rep = uniformity_statistic(FunctionSpec.one(), 100_000, 32, seed=2, size=16)
    assert rep.U == pytest.approx(1.0, abs=1e-12)
    assert rep.q10 == pytest.approx(1.0, abs=1e-12)
    assert rep.M == 16


def test_uniformity_in_unit_interval_and_quantiles_ordered(lam_evaluator):
    rep = uniformity_statistic(
        FunctionSpec.liouville(), 200_000, 64, seed=11, size=24
    )
    assert 0.0 <= rep.q10 <= rep.q50 <= rep.q90 <= 1.0
    assert 0.0 < rep.U < 1.0


def test_per_interval_value_dominates_any_alpha(lam_evaluator):
    rep = uniformity_statistic(
        FunctionSpec.liouville(), 200_000, 64, tau=0.01, seed=3, size=8
    )
    lam = FunctionSpec.liouville()
    rng = np.random.default_rng(0)
    for x, alpha_star, value in rep.per_interval:
        iv = Interval(int(x), 64)
        assert abs(short_sum(lam, iv, alpha_star)) == pytest.approx(value, rel=1e-9)
        bound = value + 0.01 * 64
        for alpha in rng.uniform(0, 1, 20):
            assert abs(short_sum(lam, iv, float(alpha))) <= bound + 1e-9


def test_pigeonhole_slot_scan_finds_planted_mass():
    # indicator trick: for ~X/(1000 H) of the 500 slots, a strict family
    # member lands in [X, 2X]; scanning v recovers at least that many.
    X, H = 10_000_000, 1000
    hits = 0
    for v in range(0, 500, 25):
        fam = build_family(X, H, "strict", seed=17, size=None, slot=v)
        if any(X <= iv.x <= 2 * X for iv in fam.intervals):
            hits += 1
    assert hits == 20  # every sampled slot has capacity across [X, 2X]


def test_fixed_alpha_character_peak():
    # chi mod 3 concentrates at alpha = a/3; the peak mean exceeds noise level
    spec = FunctionSpec.char_twist(3, 1)
    alphas = rational_candidates(4)
    rep = fixed_alpha_statistic(spec, 30_000, 120, alphas, size=32)
    assert rep.best_alpha in (1 / 3, 2 / 3)
    assert rep.best_value >= 1 / np.sqrt(3) - 0.05
    at_zero = rep.values[rep.alphas.index(0.0)]
    assert at_zero < 0.1


def test_rational_candidates_lowest_terms():
    cands = rational_candidates(4)
    assert cands == sorted(set(cands))
    assert 0.0 in cands and 1 / 2 in cands and 1 / 3 in cands and 3 / 4 in cands
    assert len(cands) == 1 + 1 + 2 + 2  # 0, 1/2, {1,2}/3, {1,3}/4


def test_uniformity_decay_with_H(lam_evaluator):
    lam = FunctionSpec.liouville()
    u_small = uniformity_statistic(lam, 200_000, 32, seed=9, size=32).U
    u_large = uniformity_statistic(lam, 200_000, 512, seed=9, size=32).U
    assert u_large < u_small
