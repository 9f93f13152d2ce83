"""
Recurrent numbers up to a bound, computed two independent ways.

:func:`sweep` runs the brute-force oracle on every n of a range, factoring
through a segmented sieve.  :func:`generate_families` builds the same set
from the classification families without factoring anything.
:func:`reconcile` lists the n on which the oracle and the classifier
disagree.
"""

from __future__ import annotations

import io
import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from math import isqrt
from pathlib import Path

import numpy as np

from .arithmetic import MAX_N, factorize, small_divisors_of
from .classifier import Mode, classify
from .errors import DomainError, ParseError, ResourceError
from .oracle import verdict_from_factorization
from .recfit import fit_order2
from .sieve import iter_factorizations, primes_between, primes_upto

BUDGET_ENV = "RECURRENT_SIEVE_BUDGET"
DEFAULT_BUDGET = 10**7
FAMILY_BUDGET = 10**8
SIEVE_CEILING = 10**8


def default_budget():
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{BUDGET_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise DomainError(f"{BUDGET_ENV} must be positive")
    return value


def _check_range(lo, hi, budget):
    if lo < 1 or hi < lo:
        raise DomainError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    budget = default_budget() if budget is None else budget
    if hi > budget:
        raise ResourceError(f"segment [{lo}, {hi}] exceeds the sieve budget {budget}")


def _factorizations(lo, hi):
    if hi <= SIEVE_CEILING:
        return iter_factorizations(lo, hi)
    return (factorize(n) for n in range(lo, hi + 1))


def _chunks(lo, hi, workers):
    if workers <= 1:
        return [(lo, hi)]
    parts = workers * 4
    step = max(1, (hi - lo + 1 + parts - 1) // parts)
    return [(a, min(hi, a + step - 1)) for a in range(lo, hi + 1, step)]


def _map_chunks(fn, lo, hi, workers):
    chunks = _chunks(lo, hi, workers)
    if len(chunks) == 1:
        return [fn(*chunks[0])]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*chunks)))


@dataclass(frozen=True)
class SweepResult:
    lo: int
    hi: int
    recurrent: tuple[int, ...]
    s_values: tuple[int, ...]  # s(n) for each entry of ``recurrent``
    s_counts: dict[int, int] = field(default_factory=dict)

    def count_upto(self, x):
        """Number of recurrent n in ``[lo, x]``."""
        return int(np.searchsorted(np.asarray(self.recurrent, dtype=np.int64), x, side="right"))


def _sweep_chunk(lo, hi):
    ns, ss = [], []
    for f in _factorizations(lo, hi):
        small = small_divisors_of(f)
        if len(small) < 3 or not fit_order2(small).is_empty:
            ns.append(f.n)
            ss.append(len(small))
    return ns, ss


def sweep(lo: int, hi: int, budget: int | None = None, workers: int = 1) -> SweepResult:
    """Every oracle-recurrent n in ``[lo, hi]``."""
    _check_range(lo, hi, budget)
    ns, ss = [], []
    for part_n, part_s in _map_chunks(_sweep_chunk, lo, hi, workers):
        ns += part_n
        ss += part_s
    return SweepResult(lo, hi, tuple(ns), tuple(ss), dict(sorted(Counter(ss).items())))


def _below_root(P, limit, e):
    """Primes p from the sorted array with p**e < limit (no int64 overflow)."""
    hi = int(round(limit ** (1 / e))) + 2
    return [p for p in P[: np.searchsorted(P, hi, side="right")].tolist() if p**e < limit]


def _take(arr, lo_excl, hi_incl):
    """Slice of the sorted prime array strictly above ``lo_excl`` and at most ``hi_incl``."""
    i = np.searchsorted(arr, lo_excl, side="right")
    j = np.searchsorted(arr, hi_incl, side="right")
    return arr[i:j]


def generate_families(limit: int, mode: Mode = Mode.THEOREM_LITERAL, budget: int = FAMILY_BUDGET):
    """
    All n <= limit in the family union for ``mode``, built from primes
    rather than by testing candidates.  Returns a sorted list without repeats.
    """
    mode = Mode(mode)
    if limit < 1:
        raise DomainError("limit must be positive")
    if limit > budget:
        raise ResourceError(f"family limit {limit} exceeds budget {budget}")
    P = primes_upto(max(limit, 2))
    out = []

    # C1: p^k
    base, cur = P[P <= limit], P[P <= limit].copy()
    while cur.size:
        out.append(cur)
        keep = cur <= limit // base
        base, cur = base[keep], cur[keep] * base[keep]

    # C2: p^k q with q > p^k
    for p in _below_root(P, limit, 2):
        pk = p
        while pk * pk < limit:
            out.append(pk * _take(P, pk, limit // pk))
            pk *= p

    # C3: p q^k with p < q
    for q in P.tolist():
        if 2 * q > limit:
            break
        qk = q
        while 2 * qk <= limit:
            out.append(qk * _take(P, 1, min(q - 1, limit // qk)))
            qk *= q

    # C4: p q^k r with p < q, r > p q^k
    for p in _below_root(P, limit, 3):
        for q in _take(P, p, isqrt(limit // p)).tolist():
            m = p * q
            while m * m < limit:
                out.append(m * _take(P, m, limit // m))
                m *= q

    if limit >= 60:
        out.append(np.array([60], dtype=np.int64))

    # C6: p^3 q with p < q < p^2, (p^2 - q) | (q - p)
    for p in _below_root(P, limit, 4):
        qs = _take(P, p, min(p * p - 1, limit // p**3))
        qs = qs[(qs - p) % (p * p - qs) == 0]
        out.append(p**3 * qs)

    # C7: p q r with q < r < p q, (p^2 - q) | (p q - r)
    for p in _below_root(P, limit, 3):
        for q in _take(P, p, isqrt(limit // p)).tolist():
            rs = _take(P, q, min(p * q - 1, limit // (p * q)))
            rs = rs[(p * q - rs) % (p * p - q) == 0]
            out.append(p * q * rs)

    if mode is Mode.ORACLE_COMPLETE:
        out.append(np.array([1], dtype=np.int64))
        # X2: p^2 q with p < q < p^2
        for p in _below_root(P, limit, 3):
            out.append(p * p * _take(P, p, min(p * p - 1, limit // (p * p))))

    if not out:
        return []
    allv = np.unique(np.concatenate(out))
    return allv[allv <= limit].tolist()


@dataclass(frozen=True)
class ReconciliationRecord:
    n: int
    oracle: bool
    categories: tuple[str, ...]
    kind: str  # "oracle-only" | "classifier-only"

    def to_json(self):
        return json.dumps(
            {"n": self.n, "oracle": self.oracle, "categories": list(self.categories), "kind": self.kind},
            separators=(",", ":"),
        )


def _reconcile_chunk(lo, hi, mode, known=None):
    records = []
    for f in _factorizations(lo, hi):
        if known is not None:
            oracle = bool(known[f.n - lo])
        else:
            small = small_divisors_of(f)
            oracle = len(small) < 3 or not fit_order2(small).is_empty
        cls = classify(f, mode)
        if oracle != cls.recurrent:
            kind = "oracle-only" if oracle else "classifier-only"
            records.append(
                ReconciliationRecord(f.n, oracle, tuple(str(c) for c in cls.categories), kind)
            )
    return records


def reconcile(limit: int, mode: Mode = Mode.THEOREM_LITERAL, sweep_result: SweepResult | None = None,
              budget: int | None = None, workers: int = 1) -> list[ReconciliationRecord]:
    """
    Every n <= limit where the oracle and ``classify(n, mode)`` disagree.
    A precomputed ``sweep_result`` covering ``[1, limit]`` saves rerunning the oracle.
    """
    mode = Mode(mode)
    _check_range(1, limit, budget)
    if sweep_result is not None:
        if sweep_result.lo != 1 or sweep_result.hi < limit:
            raise DomainError("sweep_result must cover [1, limit]")
        known = np.zeros(limit, dtype=bool)
        rec = np.asarray(sweep_result.recurrent, dtype=np.int64)
        known[rec[rec <= limit] - 1] = True
        return _reconcile_chunk(1, limit, mode, known)
    out = []
    for part in _map_chunks(partial(_reconcile_chunk, mode=mode), 1, limit, workers):
        out += part
    return out


def interrupted_witness(p=2, q=3, k=3, bound=10**12):
    """
    Smallest ``n = p q^k r^2`` (r prime, r > p q^k, n <= bound) that is not
    recurrent although its first k+2 small divisors do satisfy a recurrence.
    Returns ``(n, r)`` or ``None``.
    """
    m = p * q**k
    r_max = isqrt(bound // m)
    for r in primes_between(m + 1, r_max).tolist():
        n = m * r * r
        v = verdict_from_factorization(factorize(n))
        if not v.recurrent and not fit_order2(v.small_divisors[: k + 2]).is_empty:
            return n, r
    return None


# --- b-files -----------------------------------------------------------------


def format_bfile(seq, start_index: int = 1) -> str:
    prev = None
    lines = []
    for i, v in enumerate(seq, start=start_index):
        v = int(v)
        if prev is not None and v <= prev:
            raise DomainError(f"sequence not increasing at index {i}")
        prev = v
        lines.append(f"{i} {v}\n")
    return "".join(lines)


def write_bfile(seq, start_index: int = 1, destination=None) -> str:
    """
    Render ``seq`` as an OEIS b-file (``"index value"`` per line) and write it
    to ``destination`` (path or text stream) if given.  Returns the text.
    """
    text = format_bfile(seq, start_index)
    if destination is None:
        return text
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        Path(destination).write_bytes(text.encode("ascii"))
    return text


def parse_bfile(text: str, with_offset: bool = False):
    values = []
    first = expected = None
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'index value', got {line!r}", lineno)
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        if expected is not None and idx != expected:
            raise ParseError(f"index {idx} does not follow {expected - 1}", lineno)
        if not 0 <= val <= MAX_N:
            raise ParseError(f"value {val} outside the 64-bit range", lineno)
        if values and val <= values[-1]:
            raise ParseError(f"value {val} is not above the previous value", lineno)
        if first is None:
            first = idx
        expected = idx + 1
        values.append(val)
    return (values, first) if with_offset else values


def read_bfile(source, with_offset: bool = False):
    """Values of a b-file read from a path or a text stream."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text(encoding="ascii")
    return parse_bfile(text, with_offset)
