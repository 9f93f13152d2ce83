"""
Exact integer arithmetic: primality, factorization and divisor bookkeeping.

Everything here works on Python ints, so intermediate products never wrap.
Inputs are restricted to the unsigned 64-bit range, which is where the
deterministic Miller-Rabin base set below is known to be exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, isqrt, prod

from .errors import DomainError, ResourceError

MAX_N = 2**64 - 1
DEFAULT_DIVISOR_CAP = 2**16
TRIAL_BOUND = 10_000

# Deterministic for every n < 3.3e24 (Sorenson & Webster), hence all 64-bit n.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _small_primes(bound):
    sieve = bytearray([1]) * bound
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(bound - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound, i)))
    return tuple(i for i in range(bound) if sieve[i])


TRIAL_PRIMES = _small_primes(TRIAL_BOUND)
_TRIAL_SET = frozenset(TRIAL_PRIMES)


def _miller_rabin(n, bases):
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all ``n < 2**64``."""
    if n < 2:
        return False
    if n < TRIAL_BOUND:
        return n in _TRIAL_SET
    for p in TRIAL_PRIMES[:25]:
        if n % p == 0:
            return False
    return _miller_rabin(n, _MR_BASES)


def _brent(n, rng):
    """Return a nontrivial factor of the odd composite ``n``."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            # batched product collapsed; step one at a time from the checkpoint
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n, rng, out):
    if n == 1:
        return
    if is_prime(n):
        out.append(n)
        return
    r = isqrt(n)
    if r * r == n:
        _split(r, rng, out)
        _split(r, rng, out)
        return
    d = _brent(n, rng)
    _split(d, rng, out)
    _split(n // d, rng, out)


@dataclass(frozen=True)
class Factorization:
    """``n`` together with its prime factorization, primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    @property
    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    @property
    def tau(self) -> int:
        return prod(e + 1 for _, e in self.factors)

    def value(self) -> int:
        return prod(p**e for p, e in self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def factorize(n: int, seed: int = 0) -> Factorization:
    """
    Factor ``1 <= n < 2**64``.

    Trial division by the primes below 10^4, then Miller-Rabin on the cofactor,
    then Pollard's rho with Brent's cycle detection for what is left.
    ``seed`` fixes the rho start points; the result never depends on it.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"factorize needs a positive integer, got {n!r}")
    if n > MAX_N:
        raise DomainError(f"{n} exceeds the 64-bit range")
    factors = []
    m = n
    for p in TRIAL_PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    if m > 1:
        if m < TRIAL_BOUND * TRIAL_BOUND or is_prime(m):
            factors.append((m, 1))
        else:
            found = []
            _split(m, random.Random(seed), found)
            for p in sorted(set(found)):
                factors.append((p, found.count(p)))
    return Factorization(n, tuple(factors))


def small_divisors_of(f: Factorization) -> list[int]:
    """Sorted divisors ``d`` of ``f.n`` with ``d*d <= f.n``, pruned while generating."""
    r = isqrt(f.n)
    divs = [1]
    for p, e in f.factors:
        if p > r:
            break
        new = []
        for d in divs:
            x = d
            for _ in range(e):
                x *= p
                if x > r:
                    break
                new.append(x)
        divs += new
    divs.sort()
    return divs


@dataclass(frozen=True)
class DivisorProfile:
    n: int
    divisors: tuple[int, ...]
    small_divisors: tuple[int, ...]
    tau: int
    s: int
    is_square: bool

    @property
    def large_divisors(self) -> tuple[int, ...]:
        return self.divisors[self.s :]


def divisor_profile(n, cap=DEFAULT_DIVISOR_CAP, factorization=None) -> DivisorProfile:
    """
    All divisors of ``n`` and the small ones among them (those with ``d*d <= n``).

    Raises :class:`ResourceError` if ``n`` has more than ``cap`` divisors.
    """
    f = factorization if factorization is not None else factorize(n)
    if f.n != n:
        raise DomainError(f"factorization is for {f.n}, not {n}")
    tau = f.tau
    if tau > cap:
        raise ResourceError(f"{n} has {tau} divisors, above the cap of {cap}")
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**j for d in divs for j in range(e + 1)]
    divs.sort()
    r = isqrt(n)
    s = 0
    while s < tau and divs[s] <= r:
        s += 1
    return DivisorProfile(
        n=n,
        divisors=tuple(divs),
        small_divisors=tuple(divs[:s]),
        tau=tau,
        s=s,
        is_square=r * r == n,
    )
