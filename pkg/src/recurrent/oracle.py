"""Brute-force decision procedure: fit the small divisors of n directly."""

from __future__ import annotations

from dataclasses import dataclass

from .arithmetic import DEFAULT_DIVISOR_CAP, Factorization, divisor_profile, factorize, small_divisors_of
from .recfit import AffineSolutionSet, fit_order2


@dataclass(frozen=True)
class OracleVerdict:
    n: int
    recurrent: bool
    s: int
    fit: AffineSolutionSet
    small_divisors: tuple[int, ...]

    def describe(self):
        head = "recurrent" if self.recurrent else "not-recurrent"
        parts = [head]
        if self.recurrent:
            parts.append(self.fit.describe())
        parts.append(f"s={self.s}")
        parts.append("S=[" + ",".join(map(str, self.small_divisors)) + "]")
        return " ".join(parts)

    def to_dict(self):
        return {
            "n": self.n,
            "recurrent": self.recurrent,
            "s": self.s,
            "fit": self.fit.to_dict(),
            "small_divisors": list(self.small_divisors),
        }


def verdict_from_divisors(n, small) -> OracleVerdict:
    fit = fit_order2(small)
    return OracleVerdict(n, not fit.is_empty, len(small), fit, tuple(small))


def verdict_from_factorization(f: Factorization) -> OracleVerdict:
    return verdict_from_divisors(f.n, small_divisors_of(f))


def is_recurrent(n: int, cap: int = DEFAULT_DIVISOR_CAP) -> OracleVerdict:
    """
    Decide whether the sorted small divisors of ``n`` satisfy an integer
    recurrence of order at most two.  Lists of length <= 2 are vacuously
    recurrent (the fit is the whole plane).
    """
    prof = divisor_profile(n, cap=cap)
    return verdict_from_divisors(n, prof.small_divisors)


_LETTERS = "pqrstuvw"


def configuration(small_divisors, length=5) -> tuple[str, ...]:
    """
    Symbolic shape of the first ``length`` small divisors, e.g.
    ``(1, 2, 3, 4, 5) -> ("1", "p", "q", "p^2", "r")``.

    Primes are lettered p, q, r, ... in increasing order.  A new prime always
    shows up as itself before any of its multiples, so order of appearance in
    the sorted list is order of size.
    """
    letters = {}
    out = []
    for d in small_divisors[:length]:
        f = factorize(d)
        if not f.factors:
            out.append("1")
            continue
        parts = []
        for p, e in f.factors:
            if p not in letters:
                letters[p] = _LETTERS[len(letters)]
            parts.append((letters[p], e))
        parts.sort()
        out.append("".join(c if e == 1 else f"{c}^{e}" for c, e in parts))
    return tuple(out)
