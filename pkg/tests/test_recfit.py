import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recurrent.arithmetic import divisor_profile
from recurrent.errors import DomainError, ResourceError
from recurrent.recfit import (
    EMPTY,
    PLANE,
    AffineSolutionSet,
    Kind,
    LinearEquation,
    closed_form_d,
    fit_order2,
    intersect,
    satisfies,
    solve_line,
)


def brute_pairs(seq, box):
    """Every (a, b) in [-box, box]^2 generating ``seq``, by exhaustive scan."""
    return {
        (a, b)
        for a in range(-box, box + 1)
        for b in range(-box, box + 1)
        if satisfies(seq, a, b)
    }


def grid_members(sol, box):
    """Members of ``sol`` inside [-box, box]^2, enumerated from its parametrisation."""
    if sol.kind is Kind.EMPTY:
        return set()
    if sol.kind is Kind.POINT:
        a, b = sol.point
        return {(a, b)} if abs(a) <= box and abs(b) <= box else set()
    if sol.kind is Kind.PLANE:
        raise ValueError("plane has every grid pair")
    (a0, b0), (da, db) = sol.point, sol.direction
    reach = 2 * box + abs(a0) + abs(b0) + 2
    return {
        (a0 + t * da, b0 + t * db)
        for t in range(-reach, reach + 1)
        if abs(a0 + t * da) <= box and abs(b0 + t * db) <= box
    }


# --- solve_line -------------------------------------------------------------


def test_solve_line_examples():
    s = solve_line(LinearEquation(2, 1, 4))
    assert s.kind is Kind.LINE
    assert (2, 0) in s
    assert s.direction == (1, -2)
    assert solve_line(LinearEquation(0, 0, 0)) == PLANE
    assert solve_line(LinearEquation(2, 4, 3)) == EMPTY
    assert solve_line(LinearEquation(0, 0, 5)) == EMPTY


@settings(max_examples=300, deadline=None)
@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-200, 200))
def test_solve_line_is_exact_on_a_box(alpha, beta, gamma):
    sol = solve_line(LinearEquation(alpha, beta, gamma))
    box = 12
    expected = {
        (a, b) for a in range(-box, box + 1) for b in range(-box, box + 1)
        if alpha * a + beta * b == gamma
    }
    got = {(a, b) for a in range(-box, box + 1) for b in range(-box, box + 1) if (a, b) in sol}
    assert got == expected
    if sol.kind is Kind.LINE:
        da, db = sol.direction
        from math import gcd

        assert gcd(da, db) == 1
        assert da > 0 or (da == 0 and db > 0)
        assert alpha * da + beta * db == 0


# --- intersect --------------------------------------------------------------


def test_intersect_examples():
    l1 = solve_line(LinearEquation(2, 1, 3))
    l2 = solve_line(LinearEquation(3, 2, 4))
    assert intersect(l1, l2) == AffineSolutionSet.single(2, -1)

    for x in (PLANE, EMPTY, l1, AffineSolutionSet.single(1, 1)):
        assert intersect(PLANE, x) == x
        assert intersect(x, PLANE) == x

    a = solve_line(LinearEquation(2, 1, 4))
    b = solve_line(LinearEquation(4, 2, 8))
    assert intersect(a, b) == a


def test_intersect_parallel_and_non_integral():
    a = solve_line(LinearEquation(2, 1, 4))
    assert intersect(a, solve_line(LinearEquation(2, 1, 5))) == EMPTY
    # 2a + b = 1 and a - b = 1 meet at (2/3, -1/3)
    assert intersect(solve_line(LinearEquation(2, 1, 1)), solve_line(LinearEquation(1, -1, 1))) == EMPTY


def test_line_canonical_form_is_unique():
    a = AffineSolutionSet.line((0, 4), (1, -2))
    b = AffineSolutionSet.line((7, -10), (-3, 6))
    assert a == b
    assert a.point == (0, 4)


@settings(max_examples=200, deadline=None)
@given(
    st.integers(-9, 9), st.integers(-9, 9), st.integers(-40, 40),
    st.integers(-9, 9), st.integers(-9, 9), st.integers(-40, 40),
)
def test_intersect_matches_box_scan(a1, b1, c1, a2, b2, c2):
    s = intersect(solve_line(LinearEquation(a1, b1, c1)), solve_line(LinearEquation(a2, b2, c2)))
    box = 15
    for a in range(-box, box + 1):
        for b in range(-box, box + 1):
            want = a1 * a + b1 * b == c1 and a2 * a + b2 * b == c2
            assert ((a, b) in s) == want


# --- fit_order2 -------------------------------------------------------------


def test_fit_examples():
    assert fit_order2([1, 2, 3, 4, 5, 6]) == AffineSolutionSet.single(2, -1)
    assert fit_order2([1, 2, 3, 4, 6]) == EMPTY
    assert fit_order2([1, 2]) == PLANE
    assert fit_order2([1]) == PLANE


def test_fit_geometric_line_matches_scan():
    sol = fit_order2([1, 2, 4, 8])
    assert sol == solve_line(LinearEquation(2, 1, 4))
    scan = brute_pairs([1, 2, 4, 8], 10)
    assert {(2, 0), (0, 4), (1, 2)} <= scan
    assert scan == {(a, b) for a in range(-10, 11) for b in range(-10, 11) if (a, b) in sol}


def test_fit_rejects_huge_terms():
    with pytest.raises(ResourceError):
        fit_order2([1, 2, 2**63])


def _sample_pairs(sol, rng):
    if sol.kind is Kind.PLANE:
        return [(rng.randint(-100, 100), rng.randint(-100, 100)) for _ in range(5)]
    return sol.sample()


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=10**9))
def test_fit_soundness_on_profiles(n):
    seq = divisor_profile(n).small_divisors
    sol = fit_order2(seq)
    rng = random.Random(n)
    for a, b in _sample_pairs(sol, rng):
        assert satisfies(seq, a, b)


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 30), st.integers(-6, 6), st.integers(-6, 6), st.integers(3, 8))
def test_fit_recovers_generated_sequences(p, a, b, length):
    seq = [1, p]
    while len(seq) < length:
        seq.append(a * seq[-1] + b * seq[-2])
    sol = fit_order2(seq)
    assert (a, b) in sol
    for pair in sol.sample():
        assert satisfies(seq, *pair)


def test_fit_complete_on_short_prefixes():
    """Prefixes (length <= 6) of small-divisor lists for n <= 900, grid [-2000, 2000]^2."""
    box = 2000
    A = np.arange(-box, box + 1, dtype=np.int64)
    seqs = set()
    for n in range(1, 901):
        sd = divisor_profile(n).small_divisors
        for L in range(3, min(6, len(sd)) + 1):
            seqs.add(sd[:L])
    for seq in sorted(seqs):
        # every equation has beta = d_{i-2} >= 1, so each a fixes at most one b
        d1, d0, d2 = seq[1], seq[0], seq[2]
        num = d2 - d1 * A
        ok = (num % d0 == 0)
        B = num // d0
        ok &= np.abs(B) <= box
        cand = {(int(a), int(b)) for a, b in zip(A[ok], B[ok])}
        expected = {(a, b) for a, b in cand if satisfies(seq, a, b)}
        assert grid_members(fit_order2(seq), box) == expected, seq


# --- closed_form_d ------------------------------------------------------------


def test_closed_form_examples():
    assert closed_form_d(5, 2, 2, -1) == 5
    assert closed_form_d(4, 2, 0, 3) == 6
    assert closed_form_d(3, 5, 1, 0) == 5


def test_closed_form_domain():
    for i in (0, 1, 6):
        with pytest.raises(DomainError):
            closed_form_d(i, 2, 1, 1)


def test_closed_form_matches_unrolled_recurrence():
    for p in range(2, 21):
        for a in range(-20, 21):
            for b in range(-20, 21):
                seq = [1, p]
                for _ in range(3):
                    seq.append(a * seq[-1] + b * seq[-2])
                for i in range(2, 6):
                    assert closed_form_d(i, p, a, b) == seq[i - 1]


def test_closed_form_agrees_with_fit_of_60():
    sol = fit_order2(divisor_profile(60).small_divisors)
    a, b = sol.point
    assert [1] + [closed_form_d(i, 2, a, b) for i in range(2, 6)] == [1, 2, 3, 4, 5]
