"""
Numpy sieves: primes, segmented factorization, distinct-prime-factor counts.
"""

from __future__ import annotations

from math import isqrt

import numpy as np

from .arithmetic import Factorization
from .errors import DomainError

DEFAULT_SEGMENT = 1 << 17


def primes_upto(n: int) -> np.ndarray:
    """All primes ``<= n`` as an int64 array."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for i in range(3, isqrt(n) + 1, 2):
        if sieve[i]:
            sieve[i * i :: 2 * i] = False
    return np.flatnonzero(sieve).astype(np.int64)


def primes_between(lo: int, hi: int) -> np.ndarray:
    """Primes in the closed interval ``[lo, hi]``, sieved in one window."""
    lo = max(lo, 2)
    if hi < lo:
        return np.zeros(0, dtype=np.int64)
    window = np.ones(hi - lo + 1, dtype=bool)
    for p in primes_upto(isqrt(hi)).tolist():
        start = max(p * p, (lo + p - 1) // p * p)
        window[start - lo :: p] = False
    return np.flatnonzero(window).astype(np.int64) + lo


def _segment_factors(lo, hi, base):
    """Per-index prime/exponent lists for every n in ``[lo, hi]``."""
    size = hi - lo + 1
    rem = np.arange(lo, hi + 1, dtype=np.int64)
    idx_parts, p_parts, e_parts = [], [], []
    for p in base:
        if p * p > hi:
            break
        idx = np.arange((-lo) % p, size, p)
        if idx.size == 0:
            continue
        sub = rem[idx] // p
        exp = np.ones(idx.size, dtype=np.int64)
        while True:
            q, r = np.divmod(sub, p)
            hit = r == 0
            if not hit.any():
                break
            sub = np.where(hit, q, sub)
            exp += hit
        rem[idx] = sub
        idx_parts.append(idx)
        p_parts.append(np.full(idx.size, p, dtype=np.int64))
        e_parts.append(exp)
    # leftover cofactors above sqrt(hi) are prime and exceed every recorded factor
    big = np.flatnonzero(rem > 1)
    idx_parts.append(big)
    p_parts.append(rem[big])
    e_parts.append(np.ones(big.size, dtype=np.int64))

    idx = np.concatenate(idx_parts)
    order = np.argsort(idx, kind="stable")
    idx = idx[order].tolist()
    ps = np.concatenate(p_parts)[order].tolist()
    es = np.concatenate(e_parts)[order].tolist()

    table = [[] for _ in range(size)]
    for i, p, e in zip(idx, ps, es):
        table[i].append((p, e))
    return table


def iter_factorizations(lo: int, hi: int, segment: int = DEFAULT_SEGMENT):
    """Yield :class:`Factorization` for every n in ``[lo, hi]`` in order."""
    if lo < 1 or hi < lo:
        raise DomainError(f"bad range [{lo}, {hi}]")
    base = primes_upto(isqrt(hi)).tolist()
    for start in range(lo, hi + 1, segment):
        stop = min(hi, start + segment - 1)
        table = _segment_factors(start, stop, base)
        for off, fs in enumerate(table):
            yield Factorization(start + off, tuple(fs))


def omega_sieve(x: int) -> np.ndarray:
    """Array ``w`` with ``w[n]`` = number of distinct primes dividing n, 0 <= n <= x."""
    w = np.zeros(x + 1, dtype=np.uint8)
    for p in primes_upto(x).tolist():
        w[p::p] += 1
    return w
