"""
Integer coefficient fitting for ``d[i] = a*d[i-1] + b*d[i-2]``.

Each index contributes one linear equation in the unknowns (a, b).  The
integer solutions of such a system form a plane (no constraint), a line,
a single point, or nothing; :class:`AffineSolutionSet` represents all four
exactly so that geometric and bifurcated sequences, which leave a whole
line of valid (a, b), are not lost.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .errors import DomainError, ResourceError

MAX_TERM = 2**63


class Kind(str, Enum):
    PLANE = "plane"
    LINE = "line"
    POINT = "point"
    EMPTY = "empty"


@dataclass(frozen=True)
class LinearEquation:
    """``alpha*a + beta*b == gamma``."""

    alpha: int
    beta: int
    gamma: int

    def holds(self, a, b):
        return self.alpha * a + self.beta * b == self.gamma


def _egcd(x, y):
    """Return (g, s, t) with ``s*x + t*y == g == gcd(x, y) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while y:
        q, r = divmod(x, y)
        x, y = y, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if x < 0:
        return -x, -s0, -t0
    return x, s0, t0


def _canonical_direction(da, db):
    g = gcd(da, db)
    da, db = da // g, db // g
    if da < 0 or (da == 0 and db < 0):
        da, db = -da, -db
    return da, db


def _nearest_base(a0, b0, da, db):
    """Member of the line minimising |a|, then |b|."""
    if da == 0:
        # direction is (0, 1): a is fixed, b free
        return a0, 0
    t = -a0 // da
    best = None
    for tt in (t - 1, t, t + 1, t + 2):
        a, b = a0 + tt * da, b0 + tt * db
        key = (abs(a), abs(b), -a)
        if best is None or key < best[0]:
            best = (key, (a, b))
    return best[1]


@dataclass(frozen=True)
class AffineSolutionSet:
    """
    Set of integer pairs (a, b).

    ``point`` holds the single member of a POINT, or the canonical base point
    of a LINE; ``direction`` is the primitive, canonically signed step of a
    LINE.  Construct lines through :meth:`line` so they are normalised.
    """

    kind: Kind
    point: tuple[int, int] | None = None
    direction: tuple[int, int] | None = None

    @classmethod
    def line(cls, base, direction):
        da, db = _canonical_direction(*direction)
        return cls(Kind.LINE, _nearest_base(base[0], base[1], da, db), (da, db))

    @classmethod
    def single(cls, a, b):
        return cls(Kind.POINT, (a, b))

    @property
    def is_empty(self):
        return self.kind is Kind.EMPTY

    def __contains__(self, pair):
        a, b = pair
        if self.kind is Kind.PLANE:
            return True
        if self.kind is Kind.EMPTY:
            return False
        if self.kind is Kind.POINT:
            return self.point == (a, b)
        (a0, b0), (da, db) = self.point, self.direction
        return (a - a0) * db - (b - b0) * da == 0

    def sample(self, steps=(-2, -1, 0, 1, 2)):
        """A few members: the point, or base point plus multiples of the direction."""
        if self.kind is Kind.POINT:
            return [self.point]
        if self.kind is Kind.LINE:
            (a0, b0), (da, db) = self.point, self.direction
            return [(a0 + t * da, b0 + t * db) for t in steps]
        return []

    def describe(self):
        if self.kind is Kind.POINT:
            return f"a={self.point[0]} b={self.point[1]}"
        if self.kind is Kind.LINE:
            (a0, b0), (da, db) = self.point, self.direction
            return f"fit=line({a0},{b0})+t({da},{db})"
        return f"fit={self.kind.value}"

    def to_dict(self):
        out = {"kind": self.kind.value}
        if self.point is not None:
            out["point"] = list(self.point)
        if self.direction is not None:
            out["direction"] = list(self.direction)
        return out


PLANE = AffineSolutionSet(Kind.PLANE)
EMPTY = AffineSolutionSet(Kind.EMPTY)


def solve_line(eq: LinearEquation) -> AffineSolutionSet:
    """All integer (a, b) with ``alpha*a + beta*b == gamma``."""
    alpha, beta, gamma = eq.alpha, eq.beta, eq.gamma
    if alpha == 0 and beta == 0:
        return PLANE if gamma == 0 else EMPTY
    g, s, t = _egcd(alpha, beta)
    if gamma % g:
        return EMPTY
    k = gamma // g
    return AffineSolutionSet.line((s * k, t * k), (beta // g, -alpha // g))


def _intersect_lines(l1, l2):
    (a0, b0), (da, db) = l1.point, l1.direction
    (a1, b1), (ea, eb) = l2.point, l2.direction
    det = da * eb - db * ea
    if det == 0:
        return l1 if (a1, b1) in l1 else EMPTY
    # a0 + t*da = a1 + u*ea, b0 + t*db = b1 + u*eb  =>  t = tn/det
    tn = (a1 - a0) * eb - (b1 - b0) * ea
    na, nb = da * tn, db * tn
    if na % det or nb % det:
        return EMPTY
    return AffineSolutionSet.single(a0 + na // det, b0 + nb // det)


def intersect(s1: AffineSolutionSet, s2: AffineSolutionSet) -> AffineSolutionSet:
    if s1.kind is Kind.PLANE:
        return s2
    if s2.kind is Kind.PLANE:
        return s1
    if s1.kind is Kind.EMPTY or s2.kind is Kind.EMPTY:
        return EMPTY
    if s1.kind is Kind.POINT:
        return s1 if s1.point in s2 else EMPTY
    if s2.kind is Kind.POINT:
        return s2 if s2.point in s1 else EMPTY
    return _intersect_lines(s1, s2)


def equations(seq):
    """One equation per index i >= 3 (1-based): d_i = a*d_{i-1} + b*d_{i-2}."""
    return [LinearEquation(seq[i - 1], seq[i - 2], seq[i]) for i in range(2, len(seq))]


def fit_order2(seq) -> AffineSolutionSet:
    """
    Exact set of integer (a, b) such that ``seq`` obeys the order-2 recurrence.

    >>> fit_order2([1, 2, 3, 4, 5, 6]).point
    (2, -1)
    >>> fit_order2([1, 2, 3, 4, 6]).kind.value
    'empty'
    """
    for x in seq:
        if abs(x) >= MAX_TERM:
            raise ResourceError(f"sequence term {x} exceeds 2^63")
    sol = PLANE
    for i in range(2, len(seq)):
        if sol.kind is Kind.POINT:
            a, b = sol.point
            if a * seq[i - 1] + b * seq[i - 2] != seq[i]:
                return EMPTY
            continue
        sol = intersect(sol, solve_line(LinearEquation(seq[i - 1], seq[i - 2], seq[i])))
        if sol.kind is Kind.EMPTY:
            return EMPTY
    return sol


def satisfies(seq, a, b):
    """Direct check that (a, b) generates ``seq`` from its first two terms."""
    return all(seq[i] == a * seq[i - 1] + b * seq[i - 2] for i in range(2, len(seq)))


def closed_form_d(i: int, p: int, a: int, b: int) -> int:
    """Term ``d_i`` of U(1, p, a, b) as a polynomial in p, a, b, for 2 <= i <= 5."""
    if i == 2:
        return p
    if i == 3:
        return a * p + b
    if i == 4:
        return (a * a + b) * p + a * b
    if i == 5:
        return (a**3 + 2 * a * b) * p + b * (a * a + b)
    raise DomainError(f"closed form only covers indices 2..5, got {i}")
