"""Small number-theoretic helpers: gcd, Euler totient, divisor lists.

Inputs are machine-word sized (the group order n is tiny even when the
class counts are astronomically large), so trial division is plenty.
"""

from __future__ import annotations

import math


def _check_positive(name: str, value: int) -> None:
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value}")


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two positive integers."""
    _check_positive("a", a)
    _check_positive("b", b)
    return math.gcd(a, b)


def euler_phi(m: int) -> int:
    """Number of integers in 1..m coprime to m; euler_phi(1) == 1."""
    _check_positive("m", m)
    result = m
    for p in distinct_prime_factors(m):
        result -= result // p
    return result


def divisors(n: int) -> tuple[int, ...]:
    """All divisors of n in ascending order, including 1 and n."""
    _check_positive("n", n)
    small: list[int] = []
    large: list[int] = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return tuple(small + large[::-1])


def distinct_prime_factors(m: int) -> tuple[int, ...]:
    """Distinct primes dividing m, ascending; empty for m == 1."""
    _check_positive("m", m)
    primes: list[int] = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            primes.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.append(m)
    return tuple(primes)
