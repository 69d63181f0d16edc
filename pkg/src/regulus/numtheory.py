"""Small number-theory helpers: primality, Legendre symbols, residue sets."""

from __future__ import annotations

from math import isqrt

from .errors import HypothesisViolation


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_upto(n: int) -> list[int]:
    return [k for k in range(2, n + 1) if is_prime(k)]


def require_odd_prime(p: int, what: str = "p") -> None:
    if p % 2 == 0 or not is_prime(p):
        raise HypothesisViolation(f"{what} must be an odd prime, got {p}")


def legendre(a: int, p: int) -> int:
    """Legendre symbol ``(a/p)`` by Euler's criterion."""
    require_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def quadratic_residues(p: int) -> set[int]:
    """Nonzero squares mod p."""
    return {(x * x) % p for x in range(1, p)}
