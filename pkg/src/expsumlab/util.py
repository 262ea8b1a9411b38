"""Small shared helpers: deterministic parallel maps and integer hashing."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np


def ordered_parallel_map(fn, items, threads=1):
    """Map fn over items, reducing in list order regardless of thread count.

    Work items are dispatched to a thread pool but results are assembled in
    input order, so the reduction is bit-identical for any ``threads``.
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def splitmix64(x):
    """SplitMix64 finalizer; vectorized over uint64 arrays."""
    x = np.asarray(x, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = x + np.uint64(0x9E3779B97F4A7C15)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        z = z ^ (z >> np.uint64(31))
    return z


def next_pow2(n):
    """Smallest power of two >= n."""
    n = int(n)
    if n <= 1:
        return 1
    return 1 << (n - 1).bit_length()
