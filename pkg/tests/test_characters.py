"""Dirichlet characters: group axioms, orthogonality, known tables."""

import math

import numpy as np
import pytest

from expsumlab import ParameterError, character, characters_mod
from expsumlab.characters import euler_phi, group_exponent

MODULI = [1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15, 16, 21, 24, 35, 36, 40, 45]


def phi_oracle(q):
    return sum(1 for n in range(1, q + 1) if math.gcd(n, q) == 1)


@pytest.mark.parametrize("q", MODULI)
def test_character_count_is_phi(q):
    chars = characters_mod(q)
    assert len(chars) == phi_oracle(q)
    assert euler_phi(q) == phi_oracle(q)


@pytest.mark.parametrize("q", MODULI)
def test_complete_multiplicativity_and_period(q):
    for chi in characters_mod(q):
        for m in range(2 * q):
            assert chi(m) == pytest.approx(chi(m + q), abs=1e-12)
            for n in range(q):
                assert chi(m) * chi(n) == pytest.approx(chi(m * n), abs=1e-12)


@pytest.mark.parametrize("q", MODULI)
def test_vanishing_off_units_and_unimodular_on_units(q):
    for chi in characters_mod(q):
        for n in range(q):
            v = chi(n)
            if q > 1 and math.gcd(n, q) != 1:
                assert v == 0
            else:
                assert abs(abs(v) - 1.0) < 1e-12


@pytest.mark.parametrize("q", MODULI)
def test_row_orthogonality(q):
    chars = characters_mod(q)
    for i, chi in enumerate(chars):
        for j, psi in enumerate(chars):
            s = sum(chi(n) * np.conj(psi(n)) for n in range(q))
            want = phi_oracle(q) if i == j else 0.0
            assert s == pytest.approx(want, abs=1e-10)


@pytest.mark.parametrize("q", MODULI)
def test_column_orthogonality(q):
    chars = characters_mod(q)
    units = [n for n in range(q) if math.gcd(n, q) == 1] or [0]
    for m in units:
        for n in units:
            s = sum(chi(m) * np.conj(chi(n)) for chi in chars)
            want = phi_oracle(q) if m == n else 0.0
            assert s == pytest.approx(want, abs=1e-10)


def test_index_zero_is_principal():
    for q in MODULI:
        assert character(q, 0).is_principal


def test_legendre_symbol_mod_5():
    # the unique real non-principal character mod 5 is the Legendre symbol
    chars = characters_mod(5)
    real = [
        chi for chi in chars
        if not chi.is_principal
        and all(abs(chi(n).imag) < 1e-12 for n in range(5))
    ]
    assert len(real) == 1
    chi = real[0]
    squares = {(n * n) % 5 for n in range(1, 5)}
    for n in range(1, 5):
        want = 1.0 if n in squares else -1.0
        assert chi(n) == pytest.approx(want, abs=1e-12)


def test_orders_divide_group_exponent():
    for q in MODULI:
        L = group_exponent(q)
        for chi in characters_mod(q):
            assert L % chi.order == 0
            vals = [chi(n) ** chi.order for n in range(q) if abs(chi(n)) > 0.5]
            assert all(abs(v - 1.0) < 1e-10 for v in vals)


def test_values_block_matches_calls():
    chi = character(12, 3)
    block = chi.values(50, 80)
    assert np.allclose(block, [chi(n) for n in range(50, 80)], atol=1e-14)


def test_bad_parameters_raise():
    with pytest.raises(ParameterError):
        character(5, 4)
    with pytest.raises(ParameterError):
        character(0, 0)
