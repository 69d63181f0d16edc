"""Brute-force residue coverage and uniqueness checks.

With ``P(k) = (3k^2+k)/2`` and ``T(k) = (k^2+k)/2``:

* ``kmj_cover_check``: ``2P(k) + 5P(m)`` hits every residue mod p;
* ``representable_check``: ``T(k) + 4P(m)`` (b8) or ``T(k) + 4T(m)`` (b16)
  hits every residue mod p;
* ``uniqueness_check``: the special target residue of the b5, b8 or b16
  argument is attained by exactly one designated index pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import HypothesisViolation
from .numtheory import is_prime, legendre

__all__ = [
    "CoverageResult",
    "kmj_cover_check",
    "representable_check",
    "uniqueness_check",
    "qualifying_primes",
]


def _P(k: int) -> int:
    return (3 * k * k + k) // 2


def _T(k: int) -> int:
    return (k * k + k) // 2


@dataclass(frozen=True)
class CoverageResult:
    check: str
    p: int
    passed: bool
    uncovered: tuple[int, ...] = ()
    solutions: tuple[tuple[int, int], ...] = ()
    expected: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        out = {"check": self.check, "p": self.p, "passed": self.passed}
        if self.uncovered:
            out["uncovered"] = list(self.uncovered)
        if self.expected is not None:
            out["expected"] = list(self.expected)
            out["solutions"] = [list(s) for s in self.solutions]
        return out


def _require(p: int, ok: bool, what: str) -> None:
    if not is_prime(p) or not ok:
        raise HypothesisViolation(f"{what}, got p = {p}")


def _hypothesis(form: str, p: int) -> None:
    if form == "b5":
        _require(p, p >= 5 and legendre(-10, p) == -1, "needs a prime p >= 5 with (-10/p) = -1")
    elif form == "b8":
        _require(p, p >= 5 and p % 6 == 5, "needs a prime p == -1 (mod 6)")
    elif form == "b16":
        _require(p, p >= 3 and p % 4 == 3, "needs a prime p == -1 (mod 4)")
    else:
        raise ValueError(f"unknown form {form!r}; expected b5, b8 or b16")


def _cover(name: str, p: int, f) -> CoverageResult:
    hit = {f(k, m) % p for k, m in product(range(p), repeat=2)}
    missing = tuple(j for j in range(p) if j not in hit)
    return CoverageResult(name, p, not missing, missing)


def kmj_cover_check(p: int) -> CoverageResult:
    """Every j mod p is ``2P(k) + 5P(m)`` for some ``k, m`` in ``[0, p-1]``."""
    _hypothesis("b5", p)
    return _cover("kmj", p, lambda k, m: 2 * _P(k) + 5 * _P(m))


_FORMS = {
    "b8": lambda k, m: _T(k) + 4 * _P(m),
    "b16": lambda k, m: _T(k) + 4 * _T(m),
}


def representable_check(form: str, p: int) -> CoverageResult:
    _hypothesis(form, p)
    return _cover(f"representable:{form}", p, _FORMS[form])


def uniqueness_check(form: str, p: int) -> CoverageResult:
    """Scan the index ranges and list every pair attaining the target residue."""
    _hypothesis(form, p)
    half = (p - 1) // 2
    sym = range(-half, half + 1)
    if form == "b5":
        from .dissection import special_k

        ks = special_k(p)
        target, expected = 7 * (p * p - 1) // 24, (ks, ks)
        pairs, f = product(sym, sym), lambda k, m: 2 * _P(k) + 5 * _P(m)
    elif form == "b8":
        target, expected = 7 * (p * p - 1) // 24, (half, (-p - 1) // 6)
        pairs, f = product(range(half + 1), sym), lambda k, m: _T(k) + 4 * _P(m)
    else:
        target, expected = 5 * (p * p - 1) // 8, (half, half)
        pairs, f = product(range(p), repeat=2), lambda k, m: _T(k) + 4 * _T(m)
    sols = tuple((k, m) for k, m in pairs if (f(k, m) - target) % p == 0)
    return CoverageResult(f"uniqueness:{form}", p, sols == (expected,), (), sols, expected)


def qualifying_primes(check: str, bound: int) -> list[int]:
    """Primes below ``bound`` meeting the hypothesis of a form (b5, b8, b16)."""
    out = []
    for p in range(2, bound):
        try:
            _hypothesis(check, p)
        except HypothesisViolation:
            continue
        out.append(p)
    return out
