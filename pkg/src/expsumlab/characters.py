"""Dirichlet characters mod q as exact root-of-unity exponent tables.

The unit group (Z/q)* is decomposed into cyclic components by CRT: one
component per odd prime power (a lifted primitive root), and for the 2-part
either nothing (2**e <= 2), the class of -1 (2**e = 4), or the pair -1 and 5
(2**e >= 8).  A character is indexed by its tuple of component exponents in
lexicographic order (first component most significant), so index 0 is the
principal character.  Values are stored as integer numerators t(n) over the
group exponent L, i.e. chi(n) = e(t(n)/L); arithmetic on the numerators is
exact and the complex table is materialized once from a shared root table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError


def _factorize(q):
    out = []
    d = 2
    while d * d <= q:
        if q % d == 0:
            e = 0
            while q % d == 0:
                q //= d
                e += 1
            out.append((d, e))
        d += 1
    if q > 1:
        out.append((q, 1))
    return out


def _primitive_root_mod_pe(p, e):
    """Primitive root mod p**e for odd prime p."""
    order_factors = _factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r, _ in order_factors):
            break
    else:  # pragma: no cover - p - 1 always has a primitive root
        raise ParameterError(f"no primitive root mod {p}")
    if e >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _crt_lift(residue, modulus_part, q):
    """x with x = residue mod modulus_part and x = 1 mod q/modulus_part."""
    other = q // modulus_part
    if other == 1:
        return residue % q
    inv = pow(other, -1, modulus_part)
    return (1 + other * ((residue - 1) * inv % modulus_part)) % q


class _Component:
    """One cyclic factor of (Z/q)*: generator, order, dlog lookup."""

    def __init__(self, modulus_part, generator, order, q):
        self.modulus_part = modulus_part
        self.order = order
        self.generator = _crt_lift(generator, modulus_part, q)
        dlog = {}
        v = 1
        for j in range(order):
            dlog[v % modulus_part] = j
            v = v * generator % modulus_part
        self._dlog = dlog

    def dlog(self, n):
        return self._dlog[n % self.modulus_part]


def _two_part_components(e, q):
    part = 1 << e
    if e <= 1:
        return []
    if e == 2:
        return [_Component(part, part - 1, 2, q)]
    # (Z/2^e)* = <-1> x <5>
    minus = _Component(part, part - 1, 2, q)
    five = _Component(part, 5, 1 << (e - 2), q)
    # dlog of n: n = (-1)^a 5^b; classify by n mod 4
    dlog_minus, dlog_five = {}, {}
    for a in (0, 1):
        v = (part - 1) ** a % part
        for b in range(five.order):
            dlog_minus[v] = a
            dlog_five[v] = b
            v = v * 5 % part
    minus._dlog = dlog_minus
    five._dlog = dlog_five
    return [minus, five]


def _group_components(q):
    comps = []
    for p, e in _factorize(q):
        if p == 2:
            comps.extend(_two_part_components(e, q))
        else:
            g = _primitive_root_mod_pe(p, e)
            order = p ** (e - 1) * (p - 1)
            comps.append(_Component(p**e, g, order, q))
    return comps


@dataclass(eq=False)
class DirichletCharacter:
    """chi mod q with chi(n) = e(exponents[n % q] / exponent_denominator)."""

    modulus: int
    index: int
    component_exponents: tuple
    exponent_denominator: int
    exponents: np.ndarray  # int64, length q, -1 where gcd(n, q) > 1
    _values: np.ndarray = field(default=None, repr=False)

    @property
    def is_principal(self):
        return all(k == 0 for k in self.component_exponents)

    @property
    def order(self):
        g = 0
        for t in self.exponents:
            if t > 0:
                g = math.gcd(g, int(t))
        return self.exponent_denominator // math.gcd(self.exponent_denominator, g) if g else 1

    def value_table(self):
        """Complex values on residues [0, q); zero off the units."""
        if self._values is None:
            L = self.exponent_denominator
            roots = np.exp(2j * np.pi * np.arange(L) / L)
            vals = np.zeros(self.modulus, dtype=np.complex128)
            ok = self.exponents >= 0
            vals[ok] = roots[self.exponents[ok] % L]
            self._values = vals
        return self._values

    def __call__(self, n):
        return complex(self.value_table()[int(n) % self.modulus])

    def values(self, lo, hi):
        """chi(n) for n in [lo, hi)."""
        table = self.value_table()
        idx = np.arange(int(lo), int(hi), dtype=np.int64) % self.modulus
        return table[idx]


def group_exponent(q):
    comps = _group_components(q)
    return math.lcm(*(c.order for c in comps)) if comps else 1


def euler_phi(q):
    comps = _group_components(q)
    return math.prod(c.order for c in comps)


def characters_mod(q):
    """All phi(q) characters mod q, lexicographic in component exponents."""
    q = int(q)
    if q < 1:
        raise ParameterError("modulus must be >= 1")
    comps = _group_components(q)
    orders = [c.order for c in comps]
    L = math.lcm(*orders) if orders else 1
    # dlog vector for every unit residue
    units = [n for n in range(q) if math.gcd(n, q) == 1] if q > 1 else [0]
    dlogs = np.array(
        [[c.dlog(n) for c in comps] for n in units], dtype=np.int64
    ).reshape(len(units), len(comps))
    weights = np.array([L // s for s in orders], dtype=np.int64)
    out = []
    n_chars = math.prod(orders) if orders else 1
    for index in range(n_chars):
        ks, rest = [], index
        for s in reversed(orders):
            rest, k = divmod(rest, s)
            ks.append(k)
        ks = tuple(reversed(ks))
        exps = np.full(q if q > 1 else 1, -1, dtype=np.int64)
        t = (dlogs * (np.array(ks, dtype=np.int64) * weights)).sum(axis=1) % L
        exps[np.array(units, dtype=np.int64)] = t
        out.append(
            DirichletCharacter(
                modulus=q,
                index=index,
                component_exponents=ks,
                exponent_denominator=L,
                exponents=exps,
            )
        )
    return out


def character(q, index):
    chars = characters_mod(q)
    if not 0 <= index < len(chars):
        raise ParameterError(
            f"character index {index} out of range for modulus {q} "
            f"(phi = {len(chars)})"
        )
    return chars[index]
