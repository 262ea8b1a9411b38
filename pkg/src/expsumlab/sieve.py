"""Segmented sieves for Liouville, Moebius and von Mangoldt value tables.

Tables cover a half-open integer range [start, stop) with stop <= 2*10**9 + 1.
Each block of 2**22 integers is sieved independently with one shared list of
base primes up to sqrt(stop - 1): every prime power p**e <= n contributes one
division to the running cofactor, the exponent parity drives liouville(n),
square divisibility kills moebius(n), and any cofactor > 1 left at the end is
the single prime factor exceeding the base-prime bound.  Blocks may be sieved
in parallel; assembly order is fixed, so output never depends on thread count.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass

import numpy as np

from .errors import CoverageError, ParameterError
from .util import ordered_parallel_map

MAX_N = 2_000_000_000
MAX_SPAN = 100_000_000
BLOCK = 1 << 22

KINDS = ("liouville", "moebius", "mangoldt")
KIND_CODES = {"liouville": 1, "moebius": 2, "mangoldt": 3}
CODE_KINDS = {v: k for k, v in KIND_CODES.items()}

_HEADER = struct.Struct("<BQQ")  # kind code u8, start u64, length u64

_base_prime_cache = {"limit": 0, "primes": np.empty(0, dtype=np.int64)}


def base_primes(limit):
    """Primes <= limit by a plain boolean sieve (cached, grown on demand)."""
    limit = int(limit)
    if limit > _base_prime_cache["limit"]:
        mask = np.ones(limit + 1, dtype=bool)
        mask[:2] = False
        for p in range(2, math.isqrt(limit) + 1):
            if mask[p]:
                mask[p * p :: p] = False
        _base_prime_cache["limit"] = limit
        _base_prime_cache["primes"] = np.nonzero(mask)[0].astype(np.int64)
    primes = _base_prime_cache["primes"]
    return primes[primes <= limit]


def _first_multiple(p, a):
    return ((a + p - 1) // p) * p


def _sieve_block_signs(kind, a, b):
    """liouville or moebius values for [a, b) as int8."""
    size = b - a
    sign = np.ones(size, dtype=np.int8)
    squarefull = np.zeros(size, dtype=bool) if kind == "moebius" else None
    rem = np.arange(a, b, dtype=np.int64)
    for p in base_primes(math.isqrt(b - 1)):
        p = int(p)
        sl = slice(_first_multiple(p, a) - a, size, p)
        rem[sl] //= p
        np.negative(sign[sl], out=sign[sl])
        pe = p * p
        while pe < b:
            sl = slice(_first_multiple(pe, a) - a, size, pe)
            rem[sl] //= p
            np.negative(sign[sl], out=sign[sl])
            if squarefull is not None:
                squarefull[sl] = True
            pe *= p
    big = rem > 1
    sign[big] = -sign[big]
    if squarefull is not None:
        sign[squarefull] = 0
    return sign


def _sieve_block_mangoldt(a, b):
    """von Mangoldt values for [a, b) as float64."""
    size = b - a
    vals = np.zeros(size, dtype=np.float64)
    composite = np.zeros(size, dtype=bool)
    for p in base_primes(math.isqrt(b - 1)):
        p = int(p)
        first = max(2 * p, _first_multiple(p, a))
        if first < b:
            composite[first - a :: p] = True
        pe = p * p
        logp = math.log(p)
        while pe < b:
            if pe >= a:
                vals[pe - a] = logp
            pe *= p
    n = np.arange(a, b, dtype=np.int64)
    prime = ~composite & (n >= 2)
    vals[prime] = np.log(n[prime].astype(np.float64))
    return vals


def _check_range(start, stop):
    if not (1 <= start < stop <= MAX_N + 1):
        raise ParameterError(
            f"range [{start}, {stop}) outside [1, {MAX_N + 1})"
        )
    if stop - start > MAX_SPAN:
        raise ParameterError(
            f"span {stop - start} exceeds {MAX_SPAN}; chain segments instead"
        )


@dataclass
class ValueTable:
    """Arithmetic-function values on [start, start + len(values))."""

    kind: str
    start: int
    values: np.ndarray

    @property
    def stop(self):
        return self.start + len(self.values)

    def value(self, n):
        """Value at the single integer n."""
        n = int(n)
        if not self.start <= n < self.stop:
            raise CoverageError(f"n={n} outside [{self.start}, {self.stop})")
        return self.values[n - self.start]

    def slice(self, lo, hi):
        """Values for the half-open range [lo, hi)."""
        if not (self.start <= lo <= hi <= self.stop):
            raise CoverageError(
                f"[{lo}, {hi}) not covered by [{self.start}, {self.stop})"
            )
        return self.values[lo - self.start : hi - self.start]

    def dump(self, path):
        """Write the binary format: header (kind u8, start u64, len u64, LE)
        then the raw payload, int8 for sign tables and float64 LE otherwise."""
        payload = self.values.astype(
            "<f8" if self.kind == "mangoldt" else np.int8
        )
        with open(path, "wb") as fh:
            fh.write(_HEADER.pack(KIND_CODES[self.kind], self.start, len(payload)))
            fh.write(payload.tobytes())

    @classmethod
    def load(cls, path):
        with open(path, "rb") as fh:
            code, start, length = _HEADER.unpack(fh.read(_HEADER.size))
            kind = CODE_KINDS.get(code)
            if kind is None:
                raise ParameterError(f"unknown kind code {code}")
            dtype = "<f8" if kind == "mangoldt" else np.int8
            values = np.frombuffer(fh.read(), dtype=dtype)
            if len(values) != length:
                raise ParameterError(
                    f"payload length {len(values)} != header length {length}"
                )
        if kind == "mangoldt":
            values = values.astype(np.float64)
        else:
            values = values.copy()
        return cls(kind=kind, start=int(start), values=values)


def sieve_range(kind, start, stop, threads=1):
    """ValueTable of `kind` on [start, stop); blocks sieved independently."""
    if kind not in KINDS:
        raise ParameterError(f"kind must be one of {KINDS}, got {kind!r}")
    start, stop = int(start), int(stop)
    _check_range(start, stop)
    blocks = [
        (a, min(a + BLOCK, stop)) for a in range(start, stop, BLOCK)
    ]
    if kind == "mangoldt":
        fn = lambda ab: _sieve_block_mangoldt(*ab)
    else:
        fn = lambda ab: _sieve_block_signs(kind, *ab)
    values = np.concatenate(ordered_parallel_map(fn, blocks, threads=threads))
    return ValueTable(kind=kind, start=start, values=values)


def primes_in(lo, hi):
    """Sorted array of primes in [lo, hi)."""
    lo, hi = int(lo), int(hi)
    if lo < 1:
        lo = 1
    if hi <= lo:
        return np.empty(0, dtype=np.int64)
    _check_range(lo, hi)
    out = []
    for a in range(lo, hi, BLOCK):
        b = min(a + BLOCK, hi)
        composite = np.zeros(b - a, dtype=bool)
        for p in base_primes(math.isqrt(b - 1)):
            p = int(p)
            first = max(2 * p, _first_multiple(p, a))
            if first < b:
                composite[first - a :: p] = True
        n = np.arange(a, b, dtype=np.int64)
        out.append(n[~composite & (n >= 2)])
    return np.concatenate(out)
