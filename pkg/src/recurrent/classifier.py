"""
Factorization-driven classification of recurrent numbers.

Families (p < q < r primes, k >= 1):

    C1  p^k
    C2  p^k q          q > p^k
    C3  p q^k
    C4  p q^k r        r > p q^k
    C5  60
    C6  p^3 q          q < p^2, (p^2 - q) | (q - p)
    C7  p q r          r < p q, (p^2 - q) | (p q - r)
    X1  1
    X2  p^2 q          q < p^2

C1-C7 are the published families.  X1 and X2 are only included in
oracle-complete mode: they are vacuously recurrent (at most three small
divisors) but match none of C1-C7.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .arithmetic import Factorization


class Mode(str, Enum):
    THEOREM_LITERAL = "theorem-literal"
    ORACLE_COMPLETE = "oracle-complete"


class Tag(str, Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    C6 = "C6"
    C7 = "C7"
    X1 = "X1"
    X2 = "X2"


LITERAL_TAGS = frozenset({Tag.C1, Tag.C2, Tag.C3, Tag.C4, Tag.C5, Tag.C6, Tag.C7})


@dataclass(frozen=True)
class Category:
    tag: Tag
    p: int | None = None
    q: int | None = None
    r: int | None = None
    k: int | None = None

    def value(self):
        """The n this category instance describes."""
        p, q, r, k = self.p, self.q, self.r, self.k
        t = self.tag
        if t is Tag.X1:
            return 1
        if t is Tag.C5:
            return 60
        if t is Tag.C1:
            return p**k
        if t is Tag.C2:
            return p**k * q
        if t is Tag.C3:
            return p * q**k
        if t is Tag.C4:
            return p * q**k * r
        if t is Tag.C6:
            return p**3 * q
        if t is Tag.C7:
            return p * q * r
        return p * p * q

    def __str__(self):
        params = ",".join(
            f"{name}={v}" for name, v in (("p", self.p), ("q", self.q), ("r", self.r), ("k", self.k))
            if v is not None
        )
        return f"{self.tag.value}({params})" if params else self.tag.value


@dataclass(frozen=True)
class Classification:
    n: int
    categories: tuple[Category, ...] = field(default_factory=tuple)
    predicted_small_divisors: tuple[int, ...] | None = None

    @property
    def recurrent(self):
        return bool(self.categories)

    def describe(self):
        if not self.categories:
            return f"n={self.n} categories=none"
        cats = ";".join(map(str, self.categories))
        s = ",".join(map(str, self.predicted_small_divisors))
        return f"n={self.n} categories={cats} S=[{s}]"

    def to_dict(self):
        return {
            "n": self.n,
            "categories": [str(c) for c in self.categories],
            "predicted_small_divisors": (
                list(self.predicted_small_divisors)
                if self.predicted_small_divisors is not None else None
            ),
        }


def predicted_small_divisors(c: Category) -> tuple[int, ...]:
    p, q, r, k = c.p, c.q, c.r, c.k
    t = c.tag
    if t is Tag.X1:
        return (1,)
    if t is Tag.C5:
        return (1, 2, 3, 4, 5, 6)
    if t is Tag.C1:
        return tuple(p**j for j in range(k // 2 + 1))
    if t is Tag.C2:
        return tuple(p**j for j in range(k + 1))
    if t in (Tag.C3, Tag.C4):
        # 1, p, q, pq, q^2, pq^2, ... interleaved
        top = k if t is Tag.C4 else k // 2
        out = []
        for j in range(top + 1):
            out.append(q**j)
            out.append(p * q**j)
        if t is Tag.C3 and k % 2 == 0:
            out.pop()  # even k stops at q^(k/2)
        return tuple(out)
    if t is Tag.C6:
        return (1, p, q, p * p)
    if t is Tag.C7:
        return (1, p, q, r)
    return (1, p, q)  # X2


def _matches(f: Factorization, mode: Mode):
    n = f.n
    ps, es = f.primes, f.exponents
    w = len(ps)
    found = []
    if n == 1:
        if mode is Mode.ORACLE_COMPLETE:
            found.append(Category(Tag.X1))
        return found
    if w == 1:
        found.append(Category(Tag.C1, p=ps[0], k=es[0]))
    elif w == 2:
        (p, a), (q, b) = f.factors
        if b == 1 and q > p**a:
            found.append(Category(Tag.C2, p=p, q=q, k=a))
        if a == 1:
            found.append(Category(Tag.C3, p=p, q=q, k=b))
        if a == 3 and b == 1 and q < p * p and (q - p) % (p * p - q) == 0:
            found.append(Category(Tag.C6, p=p, q=q))
        if mode is Mode.ORACLE_COMPLETE and a == 2 and b == 1 and q < p * p:
            found.append(Category(Tag.X2, p=p, q=q))
    elif w == 3:
        (p, a), (q, b), (r, c) = f.factors
        if a == 1 and c == 1 and r > p * q**b:
            found.append(Category(Tag.C4, p=p, q=q, r=r, k=b))
        if a == b == c == 1 and r < p * q and (p * q - r) % (p * p - q) == 0:
            found.append(Category(Tag.C7, p=p, q=q, r=r))
    if n == 60:
        found.append(Category(Tag.C5))
    return found


_ORDER = {t: i for i, t in enumerate(Tag)}


def classify(f: Factorization, mode: Mode = Mode.THEOREM_LITERAL) -> Classification:
    """Every family that ``f.n`` belongs to, in the order C1..C7, X1, X2."""
    mode = Mode(mode)
    cats = sorted(_matches(f, mode), key=lambda c: _ORDER[c.tag])
    if not cats:
        return Classification(f.n)
    return Classification(f.n, tuple(cats), predicted_small_divisors(cats[0]))


def is_recurrent_fast(f: Factorization, mode: Mode = Mode.THEOREM_LITERAL) -> bool:
    return bool(_matches(f, Mode(mode)))
