"""p-dissections of psi(q) and f(-q).

For an odd prime p, psi(q) splits into (p-1)/2 theta pieces plus the special
piece ``q^{(p^2-1)/8} psi(q^{p^2})``; for a prime p >= 5, f(-q) splits into
p-1 theta pieces plus ``(-1)^{k*} q^{(p^2-1)/24} f(-q^{p^2})``.  Each piece
lives in a single residue class mod p, and the special class is hit by no
other piece.  A :class:`DissectionReport` records the pieces symbolically
(so a reader can audit them) and the numerical replay against the
undissected series.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import HypothesisViolation
from .numtheory import is_prime, require_odd_prime
from .report import MatchReport, match_series
from .series import Series, scale, shift, series_sum, substitute_power, zero_series
from .theta import ThetaSpec, euler_series, psi_series, theta_f

__all__ = [
    "Component",
    "DissectionReport",
    "special_k",
    "psi_dissection",
    "f_dissection",
    "disjointness_check",
    "DisjointnessResult",
    "support_classes",
]

FUNCTIONS = ("psi", "f_neg")


@dataclass(frozen=True)
class Component:
    """One piece ``sign * q^shift * theta`` of a dissection.

    ``theta`` is a general ``f(+-q^r, +-q^s)`` for ordinary pieces; for the
    special piece it is the named series (psi or f(-q)) evaluated at
    ``q^{p^2}``, recorded via ``special=True``.
    """

    index: int | None
    sign: int
    shift: int
    theta: ThetaSpec
    residue: int
    special: bool = False
    scale: int = 1

    def describe(self) -> str:
        sign = "-" if self.sign < 0 else ""
        if self.special and self.theta.kind == "psi":
            body = f"psi(q^{self.scale})"
        elif self.special:
            body = f"f(-q^{self.scale})"
        else:
            body = self.theta.describe()
        return f"{sign}q^{self.shift}*{body}"

    def expand(self, N: int) -> Series:
        if self.special:
            base = psi_series if self.theta.kind == "psi" else euler_series
            inner = substitute_power(base(N // self.scale), self.scale, truncation=N)
        else:
            inner = theta_f(self.theta, N)
        return scale(shift(inner, self.shift), self.sign)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "k": self.index,
            "residue": self.residue,
            "sign": self.sign,
            "shift": self.shift,
            "special": self.special,
            "term": self.describe(),
        }
        if self.special:
            out["theta"] = {"kind": self.theta.kind, "scale": self.scale}
        else:
            t = self.theta
            out["theta"] = {"kind": "general", "a_sign": t.a_sign, "r": t.r,
                            "b_sign": t.b_sign, "s": t.s}
        return out


@dataclass(frozen=True)
class DissectionReport:
    function: str
    prime: int
    components: tuple[Component, ...]
    support: tuple[int, ...]
    special_class: int
    special_k: int | None
    match: MatchReport
    class_parts_nonzero: dict[int, bool] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.match.matched

    def to_dict(self) -> dict[str, Any]:
        return {
            "function": self.function,
            "prime": self.prime,
            "special_class": self.special_class,
            "special_k": self.special_k,
            "support": list(self.support),
            "components": [c.to_dict() for c in self.components],
            "match": self.match.to_dict(),
        }


def special_k(p: int) -> int:
    """The integer among ``(p-1)/6`` and ``(-p-1)/6``."""
    if (p - 1) % 6 == 0:
        return (p - 1) // 6
    if (-p - 1) % 6 == 0:
        return (-p - 1) // 6
    raise HypothesisViolation(f"neither (p-1)/6 nor (-p-1)/6 is integral for p = {p}")


def _require_f_prime(p: int) -> None:
    if p < 5 or not is_prime(p):
        raise HypothesisViolation(f"f(-q) dissection needs a prime p >= 5, got {p}")


def _psi_components(p: int) -> list[Component]:
    comps = []
    for k in range((p - 3) // 2 + 1):
        t = (k * k + k) // 2
        r = (p * p + (2 * k + 1) * p) // 2
        s = (p * p - (2 * k + 1) * p) // 2
        comps.append(Component(k, 1, t, ThetaSpec.general(1, r, 1, s), t % p))
    c = (p * p - 1) // 8
    comps.append(Component(None, 1, c, ThetaSpec("psi"), c % p, special=True, scale=p * p))
    return comps


def _f_components(p: int) -> list[Component]:
    ks = special_k(p)
    comps = []
    half = (p - 1) // 2
    for k in range(-half, half + 1):
        if k == ks:
            continue
        t = (3 * k * k + k) // 2
        r = (3 * p * p + (6 * k + 1) * p) // 2
        s = (3 * p * p - (6 * k + 1) * p) // 2
        sign = -1 if k % 2 else 1
        comps.append(Component(k, sign, t, ThetaSpec.general(-1, r, -1, s), t % p))
    c = (p * p - 1) // 24
    sign = -1 if ks % 2 else 1
    comps.append(Component(ks, sign, c, ThetaSpec("f_neg"), c % p, special=True, scale=p * p))
    return comps


def _report(function: str, p: int, comps: list[Component], target: Series, N: int) -> DissectionReport:
    expanded = [c.expand(N) for c in comps]
    total = series_sum(expanded) if expanded else zero_series(N)
    match = match_series(f"{'psi' if function == 'psi' else 'f'}-dissect:{p}", total, target,
                         p=p, components=len(comps))
    special = comps[-1]
    support = tuple(sorted({c.residue for c in comps}))
    # each class of the target that the pieces claim must actually be nonzero
    nonzero = {r: bool((target.coeffs[r::p] != 0).any()) for r in support}
    return DissectionReport(function, p, tuple(comps), support, special.residue,
                            special.index if function == "f_neg" else None, match, nonzero)


def psi_dissection(p: int, N: int | None = None) -> DissectionReport:
    require_odd_prime(p)
    N = p * p if N is None else N
    if N < p * p:
        raise HypothesisViolation(f"truncation {N} is below p^2 = {p * p}")
    return _report("psi", p, _psi_components(p), psi_series(N), N)


def f_dissection(p: int, N: int | None = None) -> DissectionReport:
    _require_f_prime(p)
    N = 3 * p * p if N is None else N
    if N < 3 * p * p:
        raise HypothesisViolation(f"truncation {N} is below 3p^2 = {3 * p * p}")
    return _report("f_neg", p, _f_components(p), euler_series(N), N)


@dataclass(frozen=True)
class DisjointnessResult:
    function: str
    prime: int
    passed: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.passed


def disjointness_check(function: str, p: int) -> DisjointnessResult:
    """Exhaustively check that the special residue class is not shared.

    psi: ``(k^2+k)/2`` are pairwise distinct mod p for ``0 <= k <= (p-1)/2``.
    f:   ``(3k^2+k)/2 != (p^2-1)/24`` mod p for every admissible ``k != k*``.
    A failure carries the offending pair of indices.
    """
    if function == "psi":
        require_odd_prime(p)
        seen: dict[int, int] = {}
        for k in range((p - 1) // 2 + 1):
            t = (k * k + k) // 2 % p
            if t in seen:
                return DisjointnessResult(function, p, False, (seen[t], k))
            seen[t] = k
        return DisjointnessResult(function, p, True)
    if function == "f_neg":
        _require_f_prime(p)
        ks = special_k(p)
        target = (p * p - 1) // 24 % p
        half = (p - 1) // 2
        for k in range(-half, half + 1):
            if k != ks and (3 * k * k + k) // 2 % p == target:
                return DisjointnessResult(function, p, False, (k, ks))
        return DisjointnessResult(function, p, True)
    raise ValueError(f"unknown function {function!r}; expected one of {FUNCTIONS}")


def support_classes(function: str, p: int) -> frozenset[int]:
    """Residue classes mod p where the dissection has a nonzero piece."""
    if function == "psi":
        require_odd_prime(p)
        return frozenset(c.residue for c in _psi_components(p))
    if function == "f_neg":
        _require_f_prime(p)
        return frozenset(c.residue for c in _f_components(p))
    raise ValueError(f"unknown function {function!r}; expected one of {FUNCTIONS}")
