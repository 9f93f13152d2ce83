from math import isqrt, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recurrent.arithmetic import (
    MAX_N,
    Factorization,
    divisor_profile,
    factorize,
    is_prime,
    small_divisors_of,
)
from recurrent.errors import DomainError, ResourceError
from recurrent.sieve import iter_factorizations, primes_upto


def trial_division_is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


def lucas_lehmer(p):
    m = 2**p - 1
    s = 4
    for _ in range(p - 2):
        s = (s * s - 2) % m
    return s == 0


def test_is_prime_small_cases():
    assert is_prime(2)
    assert not is_prime(1)
    assert not is_prime(0)


def test_is_prime_mersenne_61():
    assert lucas_lehmer(61)
    assert is_prime(2**61 - 1)
    assert lucas_lehmer(67) is False
    assert not is_prime(2**67 - 1)  # above 64 bits, but the base set still covers it


def test_is_prime_matches_trial_division_below_20000():
    assert [n for n in range(20000) if is_prime(n)] == [
        n for n in range(20000) if trial_division_is_prime(n)
    ]


@pytest.mark.parametrize(
    "n",
    [3215031751, 2152302898747, 3474749660383, 341550071728321, 3825123056546413051],
)
def test_is_prime_rejects_strong_pseudoprimes(n):
    # each is a strong pseudoprime to every prime base below some bound
    assert not is_prime(n)
    assert factorize(n).value() == n


def test_factorize_examples():
    assert factorize(60).factors == ((2, 2), (3, 1), (5, 1))
    assert factorize(1).factors == ()
    p = 10**9 + 7
    assert trial_division_is_prime(p)
    assert factorize(p).factors == ((p, 1),)


def test_factorize_rejects_zero_and_oversize():
    with pytest.raises(DomainError):
        factorize(0)
    with pytest.raises(DomainError):
        factorize(MAX_N + 1)


def test_factorize_all_ones_64():
    assert factorize(2**64 - 1).factors == (
        (3, 1), (5, 1), (17, 1), (257, 1), (641, 1), (65537, 1), (6700417, 1),
    )


@pytest.mark.parametrize(
    "p,q", [(2147483647, 4294967291), (4294967279, 4294967291), (1000003, 2147483647)]
)
def test_factorize_semiprimes_need_rho(p, q):
    assert trial_division_is_prime(p) and trial_division_is_prime(q)
    assert factorize(p * q).factors == ((p, 1), (q, 1))


def test_factorize_prime_square_above_trial_bound():
    p = 4294967291
    assert factorize(p * p).factors == ((p, 2),)
    q = 1000003
    assert trial_division_is_prime(q)
    assert factorize(q * q * 12).factors == ((2, 2), (3, 1), (q, 2))
    assert factorize(10007**2 * q).factors == ((10007, 2), (q, 1))


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=MAX_N))
def test_factorize_reconstructs_random_64bit(n):
    f = factorize(n)
    assert f.value() == n
    ps = f.primes
    assert list(ps) == sorted(set(ps))
    assert all(is_prime(p) for p in ps)
    assert all(e >= 1 for e in f.exponents)


def test_factorize_round_trip_to_a_million():
    primes = set(primes_upto(10**6).tolist())
    for f in iter_factorizations(1, 10**6):
        assert prod(p**e for p, e in f.factors) == f.n
        assert all(p in primes for p in f.primes)
        assert (f.n == 1) == (not f.factors)


def test_sieve_and_trial_factorizations_agree():
    for f in iter_factorizations(1, 20000):
        assert factorize(f.n) == f
    for f in iter_factorizations(999_000_000, 999_020_000):
        assert factorize(f.n) == f


def test_divisor_profile_examples():
    p = divisor_profile(60)
    assert p.small_divisors == (1, 2, 3, 4, 5, 6)
    assert (p.tau, p.s, p.is_square) == (12, 6, False)

    p = divisor_profile(36)
    assert p.small_divisors == (1, 2, 3, 4, 6)
    assert (p.tau, p.s, p.is_square) == (9, 5, True)

    p = divisor_profile(1)
    assert p.divisors == (1,) and p.small_divisors == (1,)
    assert (p.tau, p.s, p.is_square) == (1, 1, True)


def test_divisor_profile_cap():
    n = 963761198400  # 6720 divisors
    assert divisor_profile(n).tau == 6720
    with pytest.raises(ResourceError):
        divisor_profile(n, cap=1000)


def test_divisor_profile_rejects_mismatched_factorization():
    with pytest.raises(DomainError):
        divisor_profile(60, factorization=Factorization(12, ((2, 2), (3, 1))))


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=10**12))
def test_profile_invariants(n):
    prof = divisor_profile(n)
    assert prof.small_divisors == tuple(d for d in prof.divisors if d * d <= n)
    assert prof.divisors[: prof.s] == prof.small_divisors
    assert len(prof.divisors) == prof.tau
    assert all(a < b for a, b in zip(prof.divisors, prof.divisors[1:]))
    assert prof.tau == 2 * prof.s - (1 if prof.is_square else 0)
    for d in prof.small_divisors:
        assert n % d == 0 and n // d in prof.divisors and n // d >= d
    assert tuple(small_divisors_of(factorize(n))) == prof.small_divisors


def test_small_pair_product_divisor_is_small():
    for n in range(1, 10**4 + 1):
        prof = divisor_profile(n)
        small = set(prof.small_divisors)
        for a in prof.divisors:
            for b in prof.divisors:
                if a <= b and n % (a * b) == 0:
                    assert a in small, (n, a, b)
