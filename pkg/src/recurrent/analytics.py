"""
Counting functions and bound checks for the distribution of recurrent numbers.

* ``pi_k(x, k)``: integers in [1, x] with exactly k distinct prime factors.
* :func:`density_report`: f(x), pi_1..pi_3, Landau ratios and the envelope
  constant at a list of checkpoints.
* :func:`verify_bounds_lemma`: exact rational check of the quintic inequality
  that pins the sporadic case to p = 2.
* :func:`conjecture_pairs`: prime pairs giving the p^3 q family.
"""

from __future__ import annotations

import csv
import io
import json
from bisect import bisect_right
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import factorial, log

import numpy as np

from .arithmetic import factorize
from .errors import DomainError
from .sieve import omega_sieve, primes_upto

MIN_CHECKPOINT = 100
MAX_K = 3


def pi_k(x: int, k: int) -> int:
    """Count of n in [1, x] with exactly ``k`` distinct prime factors (1 <= k <= 3)."""
    if not 1 <= k <= MAX_K:
        raise DomainError(f"k must be in 1..{MAX_K}, got {k}")
    if x < 1:
        return 0
    return int(np.count_nonzero(omega_sieve(x)[1:] == k))


def pi_k_naive(x: int, k: int) -> int:
    """Same count via per-n factorization."""
    return sum(1 for n in range(1, x + 1) if factorize(n).omega == k)


def _pi_table(checkpoints):
    w = omega_sieve(max(checkpoints))
    out = {}
    for k in range(1, MAX_K + 1):
        cum = np.cumsum(w == k)
        out[k] = [int(cum[x]) for x in checkpoints]
    return out


def landau_main_term(x, k):
    """x (log log x)^(k-1) / ((k-1)! log x)."""
    return x * log(log(x)) ** (k - 1) / (factorial(k - 1) * log(x))


def hardy_ramanujan_bound(x, k, A, B):
    """A x (log log x + B)^(k-1) / ((k-1)! log x)."""
    return A * x * (log(log(x)) + B) ** (k - 1) / (factorial(k - 1) * log(x))


def envelope(x):
    ll, lx = log(log(x)), log(x)
    return x / lx + x * ll / lx + x * ll * ll / (2 * lx)


@dataclass
class DensityReport:
    checkpoints: list[int]
    f: list[int]
    pi: dict[int, list[int]]
    landau_ratio: dict[int, list[float]]
    envelope_C: list[float]
    hr_constants: tuple[float, float] | None = None
    hr_holds: dict[int, list[bool]] = field(default_factory=dict)

    def rows(self):
        for i, x in enumerate(self.checkpoints):
            row = {"x": x, "f": self.f[i]}
            for k in range(1, MAX_K + 1):
                row[f"pi{k}"] = self.pi[k][i]
            for k in range(1, MAX_K + 1):
                row[f"ratio{k}"] = self.landau_ratio[k][i]
            row["envelope_C"] = self.envelope_C[i]
            for k, flags in self.hr_holds.items():
                row[f"hr{k}"] = flags[i]
            yield row

    def to_csv(self) -> str:
        buf = io.StringIO()
        rows = list(self.rows())
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in row.items()})
        return buf.getvalue()

    def to_json(self) -> str:
        d = asdict(self)
        d["pi"] = {str(k): v for k, v in self.pi.items()}
        d["landau_ratio"] = {str(k): v for k, v in self.landau_ratio.items()}
        d["hr_holds"] = {str(k): v for k, v in self.hr_holds.items()}
        return json.dumps(d, indent=2)

    def bound_violations(self):
        """Checkpoints where f(x) exceeds pi_1 + pi_2 + pi_3."""
        return [
            x for i, x in enumerate(self.checkpoints)
            if self.f[i] > sum(self.pi[k][i] for k in range(1, MAX_K + 1))
        ]


def _recurrent_values(source):
    if hasattr(source, "recurrent"):
        return list(source.recurrent)
    if isinstance(source, (str, bytes)) or hasattr(source, "__fspath__") or hasattr(source, "read"):
        from .enumerator import read_bfile

        return read_bfile(source)
    return sorted(source)


def density_report(checkpoints, recurrent_source, A=None, B=None) -> DensityReport:
    """
    Tabulate f(x) and pi_k(x) at ``checkpoints``.

    ``recurrent_source`` is a sweep result, a b-file (path or stream) or a
    sorted iterable of recurrent numbers that covers every checkpoint.
    Ratios are plain binary64 with natural logs; nothing here is asserted.
    """
    xs = [int(x) for x in checkpoints]
    if not xs:
        raise DomainError("no checkpoints given")
    if xs != sorted(xs):
        raise DomainError("checkpoints must be ascending")
    if xs[0] < MIN_CHECKPOINT:
        raise DomainError(f"checkpoint {xs[0]} is below the floor {MIN_CHECKPOINT}")
    values = _recurrent_values(recurrent_source)
    f = [bisect_right(values, x) for x in xs]
    pi = _pi_table(xs)
    ratio = {k: [pi[k][i] / landau_main_term(x, k) for i, x in enumerate(xs)] for k in pi}
    env = [f[i] / envelope(x) for i, x in enumerate(xs)]
    report = DensityReport(xs, f, pi, ratio, env)
    if A is not None and B is not None:
        report.hr_constants = (A, B)
        report.hr_holds = {
            k: [pi[k][i] < hardy_ramanujan_bound(x, k, A, B) for i, x in enumerate(xs)] for k in pi
        }
    return report


def hr_check(x, k, A, B) -> bool:
    """Does pi_k(x) < A x (log log x + B)^(k-1) / ((k-1)! log x) hold for these A, B?"""
    return pi_k(x, k) < hardy_ramanujan_bound(x, k, A, B)


# --- the quintic inequality ---------------------------------------------------


def lemma_lhs(u: int, x: int) -> Fraction:
    """-u x^5 + (u+3) x^4 - (2u+3)/u x^3 + (3u+1)/u^2 x^2 - 2/u^2 x + 1/u^2, exactly."""
    u, x = Fraction(u), Fraction(x)
    return (
        -u * x**5
        + (u + 3) * x**4
        - (2 * u + 3) / u * x**3
        + (3 * u + 1) / u**2 * x**2
        - 2 / u**2 * x
        + 1 / u**2
    )


def lemma_P(u: int, x: int) -> Fraction:
    """Left side minus (x^2 + 1)."""
    return lemma_lhs(u, x) - (x * x + 1)


def verify_bounds_lemma(U: int, X: int) -> list[tuple[int, int]]:
    """All (u, x) with 1 <= u <= U, 2 <= x <= X satisfying lemma_lhs(u, x) >= x^2 + 1."""
    if U < 1 or X < 2:
        raise DomainError("need U >= 1 and X >= 2")
    return [(u, x) for u in range(1, U + 1) for x in range(2, X + 1) if lemma_P(u, x) >= 0]


@dataclass(frozen=True)
class MonotoneCheck:
    u_range: tuple[int, int]
    x_range: tuple[int, int]
    decreasing_failures: tuple[tuple[int, int], ...]  # (u, x) with P(u, x+1) >= P(u, x)
    start_failures: tuple[int, ...]  # u with P(u, 2) >= 0

    @property
    def ok(self):
        return not self.decreasing_failures and not self.start_failures

    def describe(self):
        (u0, u1), (x0, x1) = self.u_range, self.x_range
        status = "holds" if self.ok else "FAILS"
        return (
            f"decreasing in x and P(u,2)<0 for u in [{u0},{u1}], x in [{x0},{x1}]: {status} "
            "(finite box only; larger x is not examined)"
        )


def check_monotone_tail(U: int, X: int, u_min: int = 4) -> MonotoneCheck:
    """For each u in [u_min, U]: P(u, .) strictly decreasing on 2..X and P(u, 2) < 0."""
    dec, start = [], []
    for u in range(u_min, U + 1):
        vals = [lemma_P(u, x) for x in range(2, X + 1)]
        if vals[0] >= 0:
            start.append(u)
        for x, (a, b) in enumerate(zip(vals, vals[1:]), start=2):
            if b >= a:
                dec.append((u, x))
    return MonotoneCheck((u_min, U), (2, X), tuple(dec), tuple(start))


# --- p^3 q pairs --------------------------------------------------------------


def conjecture_pairs(limit: int) -> list[tuple[int, int]]:
    """Prime pairs p < q < p^2 with q <= limit and (p^2 - q) | (q - p)."""
    P = primes_upto(limit)
    out = []
    for i, p in enumerate(P.tolist()):
        qs = P[i + 1 : np.searchsorted(P, min(p * p - 1, limit), side="right")]
        if qs.size == 0:
            continue
        hits = qs[(qs - p) % (p * p - qs) == 0]
        out.extend((p, int(q)) for q in hits.tolist())
    return out
