"""Menu of 1-bounded test functions and their range evaluators.

A FunctionSpec names one function f with |f(n)| <= 1 on positive integers:

  liouville, moebius    sign tables from the segmented sieve
  one                   constant 1
  archimedean(t)        f(n) = n^{it}
  char_twist(q, j, t)   f(n) = chi_j(n) * n^{it} for the j-th character mod q
  custom_primes(...)    completely multiplicative from supplied prime values
  random_pm1(seed)      completely multiplicative, seeded +-1 at every prime
  linear_phase(beta)    f(n) = e(beta * n); additive test signal, not
                        multiplicative, kept on the menu for calibrating the
                        frequency machinery with a known peak

Specs are frozen and hashable so evaluators can be cached per spec; sieved
sign tables are stored as int8 and widened per slice.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import sieve
from .characters import character, euler_phi
from .errors import ParameterError
from .util import splitmix64

VARIANTS = (
    "liouville",
    "moebius",
    "one",
    "archimedean",
    "char_twist",
    "custom_primes",
    "random_pm1",
    "linear_phase",
)

TWO_PI = 2.0 * math.pi


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FunctionSpec:
    variant: str
    t: float = 0.0
    modulus: int = 0
    index: int = 0
    prime_values: tuple = ()
    default_prime_value: complex = 1.0 + 0.0j
    seed: int = 0
    beta: float = 0.0

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ParameterError(f"unknown variant {self.variant!r}")
        if self.variant == "char_twist":
            if not 1 <= self.modulus <= 100_000:
                raise ParameterError("char_twist modulus must be in [1, 1e5]")
            if not 0 <= self.index < euler_phi(self.modulus):
                raise ParameterError(
                    f"character index {self.index} out of range mod {self.modulus}"
                )
        if self.variant == "custom_primes":
            for p, v in self.prime_values:
                if not _is_prime(p):
                    raise ParameterError(f"custom prime {p} is not prime")
                if abs(v) > 1 + 1e-12:
                    raise ParameterError(f"|f({p})| = {abs(v)} exceeds 1")
            if abs(self.default_prime_value) > 1 + 1e-12:
                raise ParameterError("default prime value exceeds modulus 1")

    # -- constructors ------------------------------------------------------
    @classmethod
    def liouville(cls):
        return cls("liouville")

    @classmethod
    def moebius(cls):
        return cls("moebius")

    @classmethod
    def one(cls):
        return cls("one")

    @classmethod
    def archimedean(cls, t):
        return cls("archimedean", t=float(t))

    @classmethod
    def char_twist(cls, modulus, index, t=0.0):
        return cls("char_twist", modulus=int(modulus), index=int(index), t=float(t))

    @classmethod
    def custom_primes(cls, values, default=1.0):
        items = tuple(sorted((int(p), complex(v)) for p, v in dict(values).items()))
        return cls("custom_primes", prime_values=items,
                   default_prime_value=complex(default))

    @classmethod
    def random_pm1(cls, seed):
        return cls("random_pm1", seed=int(seed))

    @classmethod
    def linear_phase(cls, beta):
        return cls("linear_phase", beta=float(beta))

    # ----------------------------------------------------------------------
    @property
    def is_real(self):
        if self.variant in ("liouville", "moebius", "one", "random_pm1"):
            return True
        if self.variant == "custom_primes":
            vals = [v for _, v in self.prime_values] + [self.default_prime_value]
            return all(v.imag == 0 for v in vals)
        return False

    @property
    def is_multiplicative(self):
        return self.variant != "linear_phase"

    def label(self):
        v = self.variant
        if v == "archimedean":
            return f"archimedean(t={self.t:g})"
        if v == "char_twist":
            # labels land in CSV rows, so they must stay comma-free
            base = f"char_twist(q={self.modulus};index={self.index}"
            return base + (f";t={self.t:g})" if self.t else ")")
        if v == "custom_primes":
            return (
                f"custom_primes(n={len(self.prime_values)};"
                f"default={self.default_prime_value:g})"
            )
        if v == "random_pm1":
            return f"random_pm1(seed={self.seed})"
        if v == "linear_phase":
            return f"linear_phase(beta={self.beta:g})"
        return v

    def prime_value(self, p):
        """f(p) at a single prime p (used by the pretentious distance)."""
        v = self.variant
        if v in ("liouville", "moebius"):
            return -1.0
        if v == "one":
            return 1.0
        if v == "archimedean":
            return cmath.exp(1j * self.t * math.log(p))
        if v == "char_twist":
            chi = _char_cache(self.modulus, self.index)
            val = chi(p)
            if self.t:
                val *= cmath.exp(1j * self.t * math.log(p))
            return val
        if v == "custom_primes":
            return dict(self.prime_values).get(int(p), self.default_prime_value)
        if v == "random_pm1":
            return float(_random_signs(np.asarray([p]), self.seed)[0])
        if v == "linear_phase":
            return cmath.exp(2j * math.pi * ((self.beta * p) % 1.0))
        raise ParameterError(v)

    def prime_values_array(self, primes):
        """Vectorized f(p) over an int array of primes."""
        v = self.variant
        primes = np.asarray(primes, dtype=np.int64)
        if v in ("liouville", "moebius"):
            return np.full(len(primes), -1.0)
        if v == "one":
            return np.ones(len(primes))
        if v == "archimedean":
            return np.exp(1j * self.t * np.log(primes.astype(np.float64)))
        if v == "char_twist":
            chi = _char_cache(self.modulus, self.index)
            vals = chi.value_table()[primes % self.modulus]
            if self.t:
                vals = vals * np.exp(1j * self.t * np.log(primes.astype(np.float64)))
            return vals
        if v == "custom_primes":
            table = dict(self.prime_values)
            d = self.default_prime_value
            return np.array([table.get(int(p), d) for p in primes],
                            dtype=np.complex128)
        if v == "random_pm1":
            return _random_signs(primes, self.seed).astype(np.float64)
        if v == "linear_phase":
            return np.exp(2j * np.pi * ((self.beta * primes) % 1.0))
        raise ParameterError(v)


_char_table_cache = {}


def _char_cache(q, index):
    key = (q, index)
    if key not in _char_table_cache:
        _char_table_cache[key] = character(q, index)
    return _char_table_cache[key]


def _random_signs(primes, seed):
    h = splitmix64(np.asarray(primes, dtype=np.uint64) ^ splitmix64(np.uint64(seed)))
    return np.where((h >> np.uint64(63)).astype(bool), -1, 1).astype(np.int8)


def _multiplicative_range(spec, lo, hi):
    """Completely multiplicative values on [lo, hi) from prime values."""
    size = hi - lo
    vals = np.ones(size, dtype=np.complex128)
    rem = np.arange(lo, hi, dtype=np.int64)
    for p in sieve.base_primes(math.isqrt(hi - 1)):
        p = int(p)
        fp = spec.prime_value(p)
        pe = p
        while pe < hi:
            first = ((lo + pe - 1) // pe) * pe
            sl = slice(first - lo, size, pe)
            vals[sl] *= fp
            rem[sl] //= p
            pe *= p
    big = rem > 1
    if big.any():
        vals[big] *= spec.prime_values_array(rem[big])
    if lo <= 1 < hi:
        vals[1 - lo] = 1.0  # f(1) = 1
    out_real = vals.imag == 0
    if out_real.all():
        return vals.real
    return vals


class SpecEvaluator:
    """Serves f(n) on ranges, caching sieved sign tables per spec."""

    def __init__(self, spec, threads=1):
        self.spec = spec
        self.threads = threads
        self._tables = []  # ValueTables for liouville/moebius

    def _sign_table(self, lo, hi):
        for t in self._tables:
            if t.start <= lo and hi <= t.stop:
                return t
        t = sieve.sieve_range(self.spec.variant, lo, hi, threads=self.threads)
        self._tables.append(t)
        return t

    def ensure(self, lo, hi):
        """Pre-sieve coverage for [lo, hi) where the variant needs a table."""
        if self.spec.variant in ("liouville", "moebius") and hi > lo:
            self._sign_table(int(lo), int(hi))

    def values(self, lo, hi):
        """f(n) for n in [lo, hi); float64 for real variants else complex128."""
        lo, hi = int(lo), int(hi)
        if hi <= lo:
            return np.empty(0)
        if lo < 1:
            raise ParameterError(f"values requested below 1: lo={lo}")
        spec = self.spec
        v = spec.variant
        if v == "one":
            return np.ones(hi - lo)
        if v in ("liouville", "moebius"):
            return self._sign_table(lo, hi).slice(lo, hi).astype(np.float64)
        n = np.arange(lo, hi, dtype=np.int64)
        if v == "archimedean":
            return np.exp(1j * spec.t * np.log(n.astype(np.float64)))
        if v == "char_twist":
            chi = _char_cache(spec.modulus, spec.index)
            vals = chi.value_table()[n % spec.modulus].copy()
            if spec.t:
                vals *= np.exp(1j * spec.t * np.log(n.astype(np.float64)))
            return vals
        if v == "linear_phase":
            return np.exp(2j * np.pi * ((spec.beta * n) % 1.0))
        return _multiplicative_range(spec, lo, hi)


_evaluators = {}


def get_evaluator(spec, threads=1):
    """Shared per-spec evaluator so sieved tables are reused across calls."""
    if spec not in _evaluators:
        _evaluators[spec] = SpecEvaluator(spec, threads=threads)
    ev = _evaluators[spec]
    ev.threads = max(ev.threads, threads)
    return ev
