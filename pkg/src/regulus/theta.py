"""Theta-type series built from their exponent formulas, and checks of the
classical product identities they satisfy.

Generators never multiply out infinite products.  The product side of each
identity is expanded separately (``qpochhammer``) and only inside the
``verify_*`` functions, so the two sides of every check come from
different code paths.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import SpecParseError
from .report import MatchReport, match_series
from .series import (
    Series,
    _empty,
    add,
    invert,
    monomial,
    mul,
    one_series,
    power,
    scale,
    shift,
    sub,
    substitute_power,
)

__all__ = [
    "ThetaSpec",
    "EtaQuotientSpec",
    "pentagonal_terms",
    "euler_series",
    "psi_series",
    "jacobi_cube_series",
    "theta_f",
    "theta_series",
    "eta_quotient_series",
    "qpochhammer",
    "verify_euler_product",
    "verify_psi_product",
    "verify_jtp",
    "verify_jacobi_cube",
    "verify_quintuple",
    "Ramanujan5",
    "ramanujan5_check",
]


def _from_terms(terms, N: int, modulus: int) -> Series:
    arr = _empty(N + 1, modulus)
    for e, c in terms:
        if e <= N:
            arr[e] += c
    if modulus:
        arr %= modulus
    return Series._wrap(arr, modulus)


def pentagonal_terms(N: int):
    """Yield ``(exponent, sign)`` for generalized pentagonal numbers <= N."""
    yield 0, 1
    k = 1
    while True:
        lo = k * (3 * k - 1) // 2
        if lo > N:
            return
        sign = -1 if k % 2 else 1
        yield lo, sign
        hi = lo + k
        if hi <= N:
            yield hi, sign
        k += 1


def euler_series(N: int, modulus: int = 0) -> Series:
    """``(q;q)_inf`` via the pentagonal number theorem."""
    return _from_terms(pentagonal_terms(N), N, modulus)


def _triangular(N: int):
    n = 0
    while n * (n + 1) // 2 <= N:
        yield n, n * (n + 1) // 2
        n += 1


def psi_series(N: int, modulus: int = 0) -> Series:
    return _from_terms(((t, 1) for _, t in _triangular(N)), N, modulus)


def jacobi_cube_series(N: int, modulus: int = 0) -> Series:
    """``sum (-1)^n (2n+1) q^{n(n+1)/2}``, the series side of ``(q;q)^3``."""
    terms = ((t, (-1) ** n * (2 * n + 1)) for n, t in _triangular(N))
    return _from_terms(terms, N, modulus)


@dataclass(frozen=True)
class ThetaSpec:
    """A theta-type generator.

    ``general`` stands for ``f(a_sign q^r, b_sign q^s)``; the other kinds are
    the named specializations psi, f(-q), (q;q) and (q;q)^3.
    """

    kind: str
    a_sign: int = 1
    r: int = 1
    b_sign: int = 1
    s: int = 0

    KINDS = ("general", "psi", "f_neg", "euler", "jacobi_cube")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown theta kind {self.kind!r}")
        if self.kind == "general":
            if self.a_sign not in (1, -1) or self.b_sign not in (1, -1):
                raise ValueError("theta signs must be +1 or -1")
            if self.r < 0 or self.s < 0 or self.r + self.s == 0:
                raise ValueError("need r, s >= 0 with r + s > 0")

    @classmethod
    def general(cls, a_sign: int, r: int, b_sign: int, s: int) -> "ThetaSpec":
        return cls("general", a_sign, r, b_sign, s)

    def describe(self) -> str:
        if self.kind != "general":
            return {"psi": "psi(q)", "f_neg": "f(-q)", "euler": "(q;q)_inf",
                    "jacobi_cube": "(q;q)_inf^3"}[self.kind]
        a = ("-" if self.a_sign < 0 else "") + f"q^{self.r}"
        b = ("-" if self.b_sign < 0 else "") + f"q^{self.s}"
        return f"f({a}, {b})"


def theta_f(spec: ThetaSpec, N: int, modulus: int = 0) -> Series:
    """Ramanujan's ``f(a, b) = sum_n a^{n(n+1)/2} b^{n(n-1)/2}`` for monomial a, b."""
    if spec.kind != "general":
        raise ValueError("theta_f takes a general ThetaSpec")
    r, s = spec.r, spec.s
    terms = []
    for direction in (1, -1):
        n = 0 if direction == 1 else -1
        while True:
            up, down = n * (n + 1) // 2, n * (n - 1) // 2
            e = r * up + s * down
            if e > N:
                break
            sign = (spec.a_sign if up % 2 else 1) * (spec.b_sign if down % 2 else 1)
            terms.append((e, sign))
            n += direction
    return _from_terms(terms, N, modulus)


def theta_series(spec: ThetaSpec, N: int, modulus: int = 0) -> Series:
    if spec.kind == "general":
        return theta_f(spec, N, modulus)
    if spec.kind == "psi":
        return psi_series(N, modulus)
    if spec.kind in ("f_neg", "euler"):
        return euler_series(N, modulus)
    return jacobi_cube_series(N, modulus)


@dataclass(frozen=True)
class EtaQuotientSpec:
    """``prod (q^d; q^d)_inf^e`` written as ``((d, e), ...)``."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        scales = [d for d, _ in self.factors]
        if not self.factors:
            raise ValueError("an eta quotient needs at least one factor")
        if len(set(scales)) != len(scales):
            raise ValueError("eta quotient scales must be distinct")
        for d, e in self.factors:
            if d < 1 or e == 0:
                raise ValueError(f"bad eta factor {d}^{e}")

    _FACTOR = re.compile(r"^\s*(\d+)\s*\^\s*([+-]?\d+)\s*$")

    @classmethod
    def parse(cls, text: str) -> "EtaQuotientSpec":
        """Parse ``"5^1,1^-1"`` style descriptions."""
        factors = []
        for chunk in text.split(","):
            m = cls._FACTOR.match(chunk)
            if not m:
                raise SpecParseError(f"cannot parse eta factor {chunk!r} (expected d^e)")
            factors.append((int(m.group(1)), int(m.group(2))))
        try:
            return cls(tuple(factors))
        except ValueError as exc:
            raise SpecParseError(str(exc)) from None

    def __str__(self) -> str:
        return ",".join(f"{d}^{e}" for d, e in self.factors)


def eta_quotient_series(spec: EtaQuotientSpec, N: int, modulus: int = 0) -> Series:
    result = one_series(N, modulus)
    for d, e in spec.factors:
        base = euler_series(N // d, modulus)
        if e < 0:
            base = invert(base)
        factor = substitute_power(power(base, abs(e)), d, truncation=N)
        result = mul(result, factor)
    return result


# -- product oracles ----------------------------------------------------------


def _times_binomial(arr: np.ndarray, c: int, e: int) -> None:
    # in place: arr <- arr * (1 + c q^e)
    if e < len(arr):
        arr[e:] += c * arr[: len(arr) - e]


def qpochhammer(c: int, start: int, step: int, N: int, modulus: int = 0) -> Series:
    """``prod_{k>=0} (1 - c q^{start + k step})`` expanded factor by factor."""
    if start < 1 or step < 1:
        raise ValueError("need positive start and step")
    arr = _empty(N + 1, 0)
    arr[0] = 1
    e = start
    while e <= N:
        _times_binomial(arr, -c, e)
        e += step
    if modulus:
        return Series(arr, modulus)
    return Series._wrap(arr, 0)


def verify_euler_product(N: int) -> MatchReport:
    return match_series("euler-product", euler_series(N), qpochhammer(1, 1, 1, N), N=N)


def verify_psi_product(N: int) -> MatchReport:
    quotient = mul(qpochhammer(1, 2, 2, N), invert(qpochhammer(1, 1, 2, N)))
    return match_series("psi-product", psi_series(N), quotient, N=N)


def verify_jtp(t: int, sign: int, N: int) -> MatchReport:
    """Jacobi triple product at ``z = sign*q^t``.

    Both sides are Laurent series here, so each is multiplied by the same
    power of q before comparing.
    """
    if t < 1 or sign not in (1, -1):
        raise ValueError("need t >= 1 and sign = +1 or -1")
    # smallest exponent n^2 + t n on the sum side
    lowest = min(n * n + t * n for n in (-(t // 2), -((t + 1) // 2)))
    lift = -lowest
    bound = isqrt(N + lift) + t + 2
    lhs_terms = []
    for n in range(-bound, bound + 1):
        e = n * n + t * n + lift
        if 0 <= e <= N:
            lhs_terms.append((e, sign ** abs(n)))
    lhs = _from_terms(lhs_terms, N, 0)

    arr = _empty(N + 1, 0)
    arr[0] = 1
    constant, offset = 1, 0
    e = t + 1
    while e <= N:
        _times_binomial(arr, sign, e)
        e += 2
    k = 0
    while 2 * k + 1 - t <= N:
        e = 2 * k + 1 - t
        if e > 0:
            _times_binomial(arr, sign, e)
        elif e == 0:
            constant *= 1 + sign
        else:
            # 1 + s q^e = s q^e (1 + s q^{-e})
            constant *= sign
            offset += e
            _times_binomial(arr, sign, -e)
        k += 1
    e = 2
    while e <= N:
        _times_binomial(arr, -1, e)
        e += 2
    if lift + offset < 0:
        raise AssertionError("product side has lower order than the sum side")
    rhs = scale(shift(Series._wrap(arr, 0), lift + offset), constant)
    return match_series(f"jtp:{t}:{sign:+d}", lhs, rhs, t=t, sign=sign, lift=lift)


def verify_jacobi_cube(N: int) -> MatchReport:
    return match_series("jacobi-cube", jacobi_cube_series(N), power(euler_series(N), 3), N=N)


def verify_quintuple(u: int, v: int, N: int) -> MatchReport:
    """Quintuple product identity at ``x = q^u``, ``lambda = q^v``."""
    if u < 1 or v < 1:
        raise ValueError("need u, v >= 1")
    g = ThetaSpec.general
    num = mul(theta_f(g(-1, 2 * u, -1, u + v), N), substitute_power(euler_series(N), 3 * u + v))
    den = theta_f(g(-1, u, -1, 2 * u + v), N)
    lhs = mul(num, invert(den))
    rhs = add(
        theta_f(g(-1, 2 * v + 3 * u, -1, v + 6 * u), N),
        shift(theta_f(g(-1, v, -1, 2 * v + 9 * u), N), u),
    )
    return match_series(f"quintuple:{u}:{v}", lhs, rhs, u=u, v=v)


@dataclass(frozen=True)
class Ramanujan5:
    report: MatchReport
    a: Series
    b: Series
    replay: MatchReport


def _pochhammer_multi(starts, step: int, N: int, modulus: int) -> Series:
    out = one_series(N, modulus)
    for s in starts:
        out = mul(out, qpochhammer(1, s, step, N, modulus))
    return out


def ramanujan5_check(N: int, modulus: int = 0) -> Ramanujan5:
    """Check ``(q;q) = (q^25;q^25) (a(q) - q - q^2 b(q))`` and return a, b.

    ``a(q) = (q^10, q^15; q^25) / (q^5, q^20; q^25)`` and ``b = 1/a``.  The
    replay also checks that the 5-dissection of (q;q) lines up with the
    three terms (classes 3 and 4 empty).
    """
    a = mul(_pochhammer_multi((10, 15), 25, N, modulus),
            invert(_pochhammer_multi((5, 20), 25, N, modulus)))
    b = invert(a)
    e25 = substitute_power(euler_series(N // 25, modulus), 25, truncation=N)
    bracket = sub(sub(a, monomial(1, 1, N, modulus)), shift(b, 2))
    euler = euler_series(N, modulus)
    report = match_series("ramanujan5", euler, mul(e25, bracket), N=N)

    # 5-dissection replay: a(q), b(q) and (q^25;q^25) are series in q^5
    pieces = [mul(e25, a), scale(e25, -1), scale(mul(e25, b), -1)]
    expected = _empty(N + 1, modulus)
    for r, piece in enumerate(pieces):
        for idx in range(r, N + 1, 5):
            expected[idx] = piece.coeffs[idx - r]
    if modulus:
        expected %= modulus
    classes_ok = all(not np.any(p.coeffs[np.arange(N + 1) % 5 != 0]) for p in (a, b, e25))
    replay = match_series("ramanujan5-dissection", euler, Series._wrap(expected, modulus),
                          components_in_q5=classes_ok)
    if not classes_ok:
        replay = MatchReport(replay.identity, replay.truncation, False,
                             details={"reason": "a, b or (q^25;q^25) has a term off q^5"})
    return Ramanujan5(report, a, b, replay)
