"""Exact integer number theory: factorization, divisors, valuations.

Every integer handled by the genus formulas is at most (q+1)^2 for a
desk-scale prime power q, so deterministic trial division is exact, fast
and dependency-free.  Python ints are arbitrary precision, which keeps
products like (q+1)*q exact at q = 3^7 and beyond.
"""

from __future__ import annotations

from math import gcd, isqrt

__all__ = [
    "factorize",
    "divisors",
    "valuation",
    "is_prime",
    "prime_power",
    "gcd",
]


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as [(p, r), ...], p ascending; 1 -> []."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    out: list[tuple[int, int]] = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            r = 0
            while n % d == 0:
                n //= d
                r += 1
            out.append((d, r))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1 in increasing order."""
    divs = [1]
    for p, r in factorize(n):
        divs = [d * p**k for d in divs for k in range(r + 1)]
    return sorted(divs)


def valuation(n: int, p: int) -> int:
    """Largest k with p^k | n, for n >= 1 and p prime."""
    if n < 1:
        raise ValueError(f"valuation requires n >= 1, got {n}")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Write q = p^n with p prime, or None if q is not a prime power."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    return fac[0]
