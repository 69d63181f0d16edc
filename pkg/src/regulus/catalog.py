"""Catalog of congruence families and their concrete instances.

Each entry names a partition function, the parameters it takes, the
hypotheses on them and the progression ``A n + B`` with modulus ``m``.
:func:`family_claims` turns a :class:`FamilyParams` into concrete
:class:`CongruenceClaim` objects, refusing parameters that violate the
hypotheses.  Offsets are computed in exact integer arithmetic and their
divisibility is asserted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable

from .claims import CongruenceClaim
from .errors import HypothesisViolation
from .numtheory import is_prime, legendre
from .partitions import PartitionFunction

__all__ = [
    "CATALOG_SCHEMA_VERSION",
    "CatalogEntry",
    "FamilyParams",
    "CATALOG",
    "get_entry",
    "catalog_document",
    "family_claims",
    "admissible_j",
    "regression_grid",
    "GRID_PRIMES",
]

CATALOG_SCHEMA_VERSION = 1
GRID_PRIMES = (3, 5, 7, 11, 13)
GRID_MULTI_PRIMES = (5, 7, 11, 13)


@dataclass(frozen=True)
class FamilyParams:
    """Parameters selecting instances of a catalog entry.

    ``index`` is the entry's running index (``i``, ``j`` or ``r``, see the
    entry's ``index_name``); ``family`` picks one numbered member of an entry
    that bundles several congruences.  ``None`` means "all" for ``index`` and
    ``family`` and "the smallest allowed value" for ``alpha``.
    """

    catalog_id: str
    p: int | None = None
    alpha: int | None = None
    index: int | None = None
    primes: tuple[int, ...] = ()
    k: int | None = None
    family: int | None = None

    def to_dict(self) -> dict[str, Any]:
        out = {"catalog_id": self.catalog_id}
        for name in ("p", "alpha", "index", "k", "family"):
            if getattr(self, name) is not None:
                out[name] = getattr(self, name)
        if self.primes:
            out["primes"] = list(self.primes)
        return out


@dataclass(frozen=True)
class Member:
    """One numbered congruence inside a bundled entry."""

    ell: int
    m: int
    A: Callable[[int], int]
    num: Callable[[int], int]
    den: int
    uses_alpha: bool = True
    alpha_min: int = 0
    alpha_min_stated: int | None = None

    @property
    def stated_min(self) -> int:
        return self.alpha_min if self.alpha_min_stated is None else self.alpha_min_stated


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    function: str
    parameters: tuple[str, ...]
    hypotheses: tuple[str, ...]
    formula: str
    anchor: str
    modulus: int = 2
    alpha_min: int | None = None
    alpha_min_stated: int | None = None
    index_name: str | None = None
    members: tuple[Member, ...] = ()
    notes: str = ""
    generator: Callable[["CatalogEntry", FamilyParams], list] | None = field(
        default=None, compare=False, repr=False)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "id": self.id,
            "function": self.function,
            "parameters": list(self.parameters),
            "hypotheses": list(self.hypotheses),
            "formula": self.formula,
            "anchor": self.anchor,
            "modulus": self.modulus,
            "alpha_min": self.alpha_min,
            "alpha_min_stated": self.alpha_min_stated,
            "notes": self.notes,
        }
        if self.members:
            out["members"] = [
                {"family": n, "function": f"b{mem.ell}" if mem.ell else "b_{l k}",
                 "modulus": mem.m, "alpha_min": mem.alpha_min if mem.uses_alpha else None,
                 "alpha_min_stated": mem.stated_min if mem.uses_alpha else None}
                for n, mem in enumerate(self.members, start=1)
            ]
        return out


# -- helpers --------------------------------------------------------------------


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise AssertionError(f"offset numerator {num} is not divisible by {den}")
    return q


def _reject_unused(entry: CatalogEntry, params: FamilyParams) -> None:
    allowed = set(entry.parameters)
    given = {
        "p": params.p is not None,
        "alpha": params.alpha is not None,
        "index": params.index is not None,
        "primes": bool(params.primes),
        "k": params.k is not None,
        "family": params.family is not None,
    }
    for name, present in given.items():
        key = entry.index_name if name == "index" else name
        if present and key not in allowed:
            raise HypothesisViolation(f"{entry.id} takes no parameter {key!r}")


def _prime_at_least(p: int | None, lo: int, entry: CatalogEntry) -> int:
    if p is None:
        raise HypothesisViolation(f"{entry.id} needs a prime p")
    if p < lo or not is_prime(p):
        raise HypothesisViolation(f"{entry.id} needs a prime p >= {lo}, got {p}")
    return p


def _alpha(entry: CatalogEntry, params: FamilyParams, shipped: int, stated: int) -> tuple[int, bool]:
    """Resolve alpha and report whether it is an erratum probe."""
    alpha = shipped if params.alpha is None else params.alpha
    if alpha < stated:
        raise HypothesisViolation(f"{entry.id} needs alpha >= {stated}, got {alpha}")
    return alpha, alpha < shipped


def _index_range(entry: CatalogEntry, params: FamilyParams, lo: int, hi: int) -> list[int]:
    if params.index is None:
        return list(range(lo, hi + 1))
    if not lo <= params.index <= hi:
        raise HypothesisViolation(
            f"{entry.id} needs {lo} <= {entry.index_name} <= {hi}, got {params.index}")
    return [params.index]


def _j_values(entry: CatalogEntry, params: FamilyParams, p: int) -> list[int]:
    ok = admissible_j(entry.id, p)
    if params.index is None:
        return list(ok)
    if params.index not in ok:
        raise HypothesisViolation(
            f"{entry.index_name} = {params.index} is not admissible for {entry.id} at p = {p}; "
            f"admissible values are {list(ok)}")
    return [params.index]


def _claim(entry, ell, A, num, den, m, **prov) -> CongruenceClaim:
    fn = (PartitionFunction.distinct_regular(ell) if entry.function.startswith("b'")
          else PartitionFunction.regular(ell))
    prov = {"catalog_id": entry.id, **{k: v for k, v in prov.items() if v is not None}}
    return CongruenceClaim(fn, A, _exact_div(num, den), m, prov)


# -- generators ---------------------------------------------------------------------


def _gen_even_i(ell: int, c: int, lo_prime: int):
    # A = p^{2a}, B = ((c i + p) p^{2a-1} - 1)/c
    def gen(entry, params):
        p = _prime_at_least(params.p, lo_prime, entry)
        alpha, probe = _alpha(entry, params, entry.alpha_min, entry.alpha_min)
        return [
            _claim(entry, ell, p ** (2 * alpha), (c * i + p) * p ** (2 * alpha - 1) - 1, c, 2,
                   p=p, alpha=alpha, i=i)
            for i in _index_range(entry, params, 1, p - 1)
        ]
    return gen


def _gen_even_j(ell: int, c: int, lo_prime: int):
    # A = p^{2a+1}, B = ((c j + 1) p^{2a} - 1)/c
    def gen(entry, params):
        p = _prime_at_least(params.p, lo_prime, entry)
        alpha, _ = _alpha(entry, params, entry.alpha_min, entry.alpha_min)
        return [
            _claim(entry, ell, p ** (2 * alpha + 1), (c * j + 1) * p ** (2 * alpha) - 1, c, 2,
                   p=p, alpha=alpha, j=j)
            for j in _j_values(entry, params, p)
        ]
    return gen


def _multi_primes(entry: CatalogEntry, params: FamilyParams, lo_prime: int) -> tuple[int, ...]:
    if not params.primes:
        raise HypothesisViolation(f"{entry.id} needs a list of primes")
    for q in params.primes:
        if q < lo_prime or not is_prime(q):
            raise HypothesisViolation(f"{entry.id} needs primes >= {lo_prime}, got {q}")
    return tuple(params.primes)


def _gen_multi_i(ell: int, c: int, lo_prime: int):
    def gen(entry, params):
        primes = _multi_primes(entry, params, lo_prime)
        *head, last = primes
        P = 1
        for q in head:
            P *= q * q
        return [
            _claim(entry, ell, P * last * last, (c * i + last) * P * last - 1, c, 2,
                   primes=list(primes), i=i)
            for i in _index_range(entry, params, 1, last - 1)
        ]
    return gen


def _gen_multi_j(ell: int, c: int, lo_prime: int):
    def gen(entry, params):
        primes = _multi_primes(entry, params, lo_prime)
        *head, last = primes
        P = 1
        for q in head:
            P *= q * q
        return [
            _claim(entry, ell, P * last, (c * j + 1) * P - 1, c, 2, primes=list(primes), j=j)
            for j in _j_values(entry, params, last)
        ]
    return gen


def _gen_b13_even_i(entry, params):
    p = _prime_at_least(params.p, 3, entry)
    alpha, _ = _alpha(entry, params, 0, 0)
    return [
        _claim(entry, 13, 4 * p ** (2 * alpha + 2), (8 * i + p) * p ** (2 * alpha + 1) - 1, 2, 2,
               p=p, alpha=alpha, i=i)
        for i in _index_range(entry, params, 1, p - 1)
    ]


def _gen_b13_even_j(entry, params):
    p = _prime_at_least(params.p, 3, entry)
    alpha, _ = _alpha(entry, params, 0, 0)
    return [
        _claim(entry, 13, 4 * p ** (2 * alpha + 1), (8 * j + 1) * p ** (2 * alpha) - 1, 2, 2,
               p=p, alpha=alpha, j=j)
        for j in _j_values(entry, params, p)
    ]


def _gen_b5_even_i(entry, params):
    p = _prime_at_least(params.p, 5, entry)
    if legendre(-10, p) != -1:
        raise HypothesisViolation(f"{entry.id} needs (-10/p) = -1, which fails for p = {p}")
    alpha, _ = _alpha(entry, params, 1, 1)
    return [
        _claim(entry, 5, 4 * p ** (2 * alpha), (24 * i + 7 * p) * p ** (2 * alpha - 1) - 1, 6, 2,
               p=p, alpha=alpha, i=i)
        for i in _index_range(entry, params, 1, p - 1)
    ]


def _gen_b8_even_i(entry, params):
    p = _prime_at_least(params.p, 5, entry)
    if p % 6 != 5:
        raise HypothesisViolation(f"{entry.id} needs p == -1 (mod 6), got {p}")
    alpha, _ = _alpha(entry, params, 1, 1)
    return [
        _claim(entry, 8, p ** (2 * alpha), (24 * i + 7 * p) * p ** (2 * alpha - 1) - 7, 24, 2,
               p=p, alpha=alpha, i=i)
        for i in _index_range(entry, params, 1, p - 1)
    ]


def _gen_b16_even_i(entry, params):
    p = _prime_at_least(params.p, 3, entry)
    if p % 4 != 3:
        raise HypothesisViolation(f"{entry.id} needs p == -1 (mod 4), got {p}")
    alpha, _ = _alpha(entry, params, 0, 0)
    return [
        _claim(entry, 16, p ** (2 * alpha + 2), (8 * i + 5 * p) * p ** (2 * alpha + 1) - 5, 8, 2,
               p=p, alpha=alpha, i=i)
        for i in _index_range(entry, params, 1, p - 1)
    ]


def _gen_sellers(entry, params):
    p = _prime_at_least(params.p, 5, entry)
    return [
        _claim(entry, p, p, r, 1, 2, p=p, r=r)
        for r in _j_values(entry, params, p)
    ]


def _member_numbers(entry: CatalogEntry, params: FamilyParams) -> list[int]:
    n = len(entry.members)
    if params.family is None:
        return list(range(1, n + 1))
    if not 1 <= params.family <= n:
        raise HypothesisViolation(f"{entry.id} has members 1..{n}, got {params.family}")
    return [params.family]


def _gen_members(entry, params):
    out = []
    for number in _member_numbers(entry, params):
        mem = entry.members[number - 1]
        if mem.uses_alpha:
            alpha, probe = _alpha(entry, params, mem.alpha_min, mem.stated_min)
        else:
            alpha, probe = 0, False
        out.append(_claim(
            entry, mem.ell, mem.A(alpha), mem.num(alpha), mem.den, mem.m,
            family=number, alpha=alpha if mem.uses_alpha else None,
            erratum_probe=True if probe else None,
        ))
    return out


_LIFT_BASES = ((5, 5, 4), (7, 7, 5), (11, 11, 6), (25, 25, 24), (49, 49, 47))


def _gen_lift(entry, params):
    if params.k is None:
        raise HypothesisViolation(f"{entry.id} needs k >= 1")
    if params.k < 1:
        raise HypothesisViolation(f"{entry.id} needs k >= 1, got {params.k}")
    out = []
    for number in _member_numbers(entry, params):
        ell, A, B = _LIFT_BASES[number - 1]
        out.append(_claim(entry, ell * params.k, A, B, 1, ell, family=number, k=params.k))
    return out


# -- the entries --------------------------------------------------------------------

_PED3 = (
    Member(4, 2, lambda a: 3 ** (2 * a + 1), lambda a: 17 * 3 ** (2 * a) - 1, 8),
    Member(4, 2, lambda a: 3 ** (2 * a + 2), lambda a: 11 * 3 ** (2 * a + 1) - 1, 8),
    Member(4, 2, lambda a: 3 ** (2 * a + 2), lambda a: 19 * 3 ** (2 * a + 1) - 1, 8),
)

_B13_MOD6 = (
    Member(13, 6, lambda a: 4 * 3 ** (2 * a + 1), lambda a: 17 * 3 ** (2 * a) - 1, 2, alpha_min=1),
    Member(13, 6, lambda a: 4 * 3 ** (2 * a), lambda a: 11 * 3 ** (2 * a - 1) - 1, 2, alpha_min=1),
)

_B13_MOD3 = (
    Member(13, 3, lambda l: 3 ** l, lambda l: 5 * 3 ** (l - 1) - 1, 2, alpha_min=2),
)

_CALKIN = (
    Member(5, 2, lambda a: 20, lambda a: 5, 1, uses_alpha=False),
    Member(5, 2, lambda a: 20, lambda a: 13, 1, uses_alpha=False),
)

_B5_POWER = (
    Member(5, 2, lambda a: 4 * 5 ** (2 * a + 1), lambda a: 31 * 5 ** (2 * a) - 1, 6),
    Member(5, 2, lambda a: 4 * 5 ** (2 * a + 1), lambda a: 79 * 5 ** (2 * a) - 1, 6),
    Member(5, 2, lambda a: 4 * 5 ** (2 * a + 2), lambda a: 83 * 5 ** (2 * a + 1) - 1, 6),
    Member(5, 2, lambda a: 4 * 5 ** (2 * a + 2), lambda a: 107 * 5 ** (2 * a + 1) - 1, 6),
)

_COMBINED4 = (
    Member(5, 10, lambda a: 4 * 5 ** (2 * a + 2), lambda a: 31 * 5 ** (2 * a) - 1, 6,
           alpha_min=1, alpha_min_stated=0),
    Member(5, 10, lambda a: 4 * 5 ** (2 * a + 2), lambda a: 79 * 5 ** (2 * a) - 1, 6,
           alpha_min=1, alpha_min_stated=0),
    Member(5, 10, lambda a: 4 * 5 ** (2 * a + 3), lambda a: 83 * 5 ** (2 * a + 1) - 1, 6),
    Member(5, 10, lambda a: 4 * 5 ** (2 * a + 3), lambda a: 107 * 5 ** (2 * a + 1) - 1, 6),
    Member(7, 21, lambda a: 7 * 3 ** (2 * a + 2), lambda a: 35 * 3 ** (2 * a + 1) - 1, 4),
    Member(7, 21, lambda a: 7 * 3 ** (2 * a + 3), lambda a: 77 * 3 ** (2 * a + 2) - 1, 4),
    Member(25, 15, lambda a: 5 * 3 ** (2 * a + 3), lambda a: 5 * 3 ** (2 * a + 2) - 1, 1),
    Member(25, 75, lambda a: 25 * 3 ** (2 * a + 3), lambda a: 50 * 3 ** (2 * a + 2) - 1, 1),
    Member(49, 21, lambda a: 7 * 3 ** (3 * a + 3), lambda a: 14 * 3 ** (3 * a + 2) - 2, 1),
    Member(49, 147, lambda a: 49 * 3 ** (3 * a + 3), lambda a: 98 * 3 ** (3 * a + 2) - 2, 1),
    Member(10, 15, lambda a: 45, lambda a: 39, 1, uses_alpha=False),
    Member(22, 33, lambda a: 297, lambda a: 259, 1, uses_alpha=False),
    Member(28, 21, lambda a: 189, lambda a: 117, 1, uses_alpha=False),
)

_FP_MOD3 = (
    Member(7, 3, lambda a: 3 ** (2 * a + 2), lambda a: 11 * 3 ** (2 * a + 1) - 1, 4),
    Member(7, 3, lambda a: 3 ** (2 * a + 3), lambda a: 5 * 3 ** (2 * a + 2) - 1, 4),
    Member(19, 3, lambda a: 3 ** (2 * a + 4), lambda a: 5 * 3 ** (2 * a + 3) - 3, 4),
    Member(19, 3, lambda a: 3 ** (2 * a + 5), lambda a: 11 * 3 ** (2 * a + 4) - 3, 4),
    Member(25, 3, lambda a: 3 ** (2 * a + 3), lambda a: 2 * 3 ** (2 * a + 2) - 1, 1),
    Member(34, 3, lambda a: 3 ** (4 * a + 3), lambda a: 19 * 3 ** (4 * a + 2) - 11, 8),
    Member(34, 3, lambda a: 3 ** (4 * a + 5), lambda a: 11 * 3 ** (4 * a + 4) - 11, 8),
    Member(37, 3, lambda a: 3 ** (3 * a + 3), lambda a: 3 ** (3 * a + 2) - 3, 2),
    Member(43, 3, lambda a: 3 ** (2 * a + 4), lambda a: 5 * 3 ** (2 * a + 3) - 7, 4),
    Member(43, 3, lambda a: 3 ** (2 * a + 5), lambda a: 11 * 3 ** (2 * a + 4) - 7, 4),
    Member(49, 3, lambda a: 3 ** (3 * a + 3), lambda a: 2 * 3 ** (3 * a + 2) - 2, 1),
    Member(10, 3, lambda a: 9, lambda a: 3, 1, uses_alpha=False),
    Member(22, 3, lambda a: 27, lambda a: 16, 1, uses_alpha=False),
    Member(28, 3, lambda a: 27, lambda a: 9, 1, uses_alpha=False),
)

_PRIME_I = ("p", "alpha", "i")
_PRIME_J = ("p", "alpha", "j")

CATALOG: dict[str, CatalogEntry] = {e.id: e for e in (
    CatalogEntry(
        "b2-even-i", "b2", _PRIME_I,
        ("p prime, p >= 5", "alpha >= 1", "1 <= i <= p-1"),
        "b2(p^(2a) n + ((24i+p) p^(2a-1) - 1)/24) == 0 mod 2",
        r"b_2\left(p^{2\alpha}n+\frac{(24i+p)p^{2\alpha-1}-1}{24}\right)\equiv 0 \pmod 2",
        alpha_min=1, alpha_min_stated=1, index_name="i",
        generator=_gen_even_i(2, 24, 5)),
    CatalogEntry(
        "b2-even-j", "b2", _PRIME_J,
        ("p prime, p >= 5", "alpha >= 0", "0 <= j <= p-1", "(24j+1 / p) = -1"),
        "b2(p^(2a+1) n + ((24j+1) p^(2a) - 1)/24) == 0 mod 2",
        r"b_2\left(p^{2\alpha+1}n+\frac{(24j+1)p^{2\alpha}-1}{24}\right)\equiv 0 \pmod 2",
        alpha_min=0, alpha_min_stated=0, index_name="j",
        generator=_gen_even_j(2, 24, 5)),
    CatalogEntry(
        "b2-multiprime-i", "b2", ("primes", "i"),
        ("each p_s prime, p_s >= 5", "1 <= i <= p_r - 1"),
        "b2(P p_r^2 n + ((24i+p_r) P p_r - 1)/24) == 0 mod 2, P = prod_{s<r} p_s^2",
        r"b_2\left(P p_r^{2}n+\frac{(24i+p_r)P p_r-1}{24}\right)\equiv 0 \pmod 2",
        index_name="i", generator=_gen_multi_i(2, 24, 5)),
    CatalogEntry(
        "b2-multiprime-j", "b2", ("primes", "j"),
        ("each p_s prime, p_s >= 5", "0 <= j <= p_r - 1", "(24j+1 / p_r) = -1"),
        "b2(P p_r n + ((24j+1) P - 1)/24) == 0 mod 2, P = prod_{s<r} p_s^2",
        r"b_2\left(P p_r n+\frac{(24j+1)P-1}{24}\right)\equiv 0 \pmod 2",
        index_name="j", generator=_gen_multi_j(2, 24, 5)),
    CatalogEntry(
        "b4-even-i", "b4", _PRIME_I,
        ("p odd prime", "alpha >= 1", "1 <= i <= p-1"),
        "b4(p^(2a) n + ((8i+p) p^(2a-1) - 1)/8) == 0 mod 2",
        r"b_4\left(p^{2\alpha}n+\frac{(8i+p)p^{2\alpha-1}-1}{8}\right)\equiv 0 \pmod 2",
        alpha_min=1, alpha_min_stated=1, index_name="i",
        generator=_gen_even_i(4, 8, 3)),
    CatalogEntry(
        "b4-even-j", "b4", _PRIME_J,
        ("p odd prime", "alpha >= 0", "0 <= j <= p-1", "(8j+1 / p) = -1"),
        "b4(p^(2a+1) n + ((8j+1) p^(2a) - 1)/8) == 0 mod 2",
        r"b_4\left(p^{2\alpha+1}n+\frac{(8j+1)p^{2\alpha}-1}{8}\right)\equiv 0 \pmod 2",
        alpha_min=0, alpha_min_stated=0, index_name="j",
        generator=_gen_even_j(4, 8, 3)),
    CatalogEntry(
        "b4-multiprime-i", "b4", ("primes", "i"),
        ("each p_s an odd prime", "1 <= i <= p_r - 1"),
        "b4(P p_r^2 n + ((8i+p_r) P p_r - 1)/8) == 0 mod 2, P = prod_{s<r} p_s^2",
        r"b_4\left(P p_r^{2}n+\frac{(8i+p_r)P p_r-1}{8}\right)\equiv 0 \pmod 2",
        index_name="i", generator=_gen_multi_i(4, 8, 3)),
    CatalogEntry(
        "b4-multiprime-j", "b4", ("primes", "j"),
        ("each p_s an odd prime", "0 <= j <= p_r - 1", "(8j+1 / p_r) = -1"),
        "b4(P p_r n + ((8j+1) P - 1)/8) == 0 mod 2, P = prod_{s<r} p_s^2",
        r"b_4\left(P p_r n+\frac{(8j+1)P-1}{8}\right)\equiv 0 \pmod 2",
        index_name="j", generator=_gen_multi_j(4, 8, 3)),
    CatalogEntry(
        "ped-3", "b4", ("alpha", "family"),
        ("alpha >= 0",),
        "b4(3^(2a+1) n + (17*3^(2a)-1)/8), b4(3^(2a+2) n + (11*3^(2a+1)-1)/8), "
        "b4(3^(2a+2) n + (19*3^(2a+1)-1)/8) == 0 mod 2",
        r"b_4\left(3^{2\alpha+1}n+\frac{17\cdot 3^{2\alpha}-1}{8}\right)\equiv 0 \pmod 2",
        alpha_min=0, alpha_min_stated=0, members=_PED3, generator=_gen_members,
        notes="members 1-3 in the order listed in the formula"),
    CatalogEntry(
        "b13-even-i", "b13", _PRIME_I,
        ("p odd prime", "alpha >= 0", "1 <= i <= p-1"),
        "b13(4 p^(2a+2) n + ((8i+p) p^(2a+1) - 1)/2) == 0 mod 2",
        r"b_{13}\left(4p^{2\alpha+2}n+\frac{(8i+p)p^{2\alpha+1}-1}{2}\right)\equiv 0 \pmod 2",
        alpha_min=0, alpha_min_stated=0, index_name="i", generator=_gen_b13_even_i),
    CatalogEntry(
        "b13-even-j", "b13", _PRIME_J,
        ("p odd prime", "alpha >= 0", "0 <= j <= p-1", "(8j+1 / p) = -1"),
        "b13(4 p^(2a+1) n + ((8j+1) p^(2a) - 1)/2) == 0 mod 2",
        r"b_{13}\left(4p^{2\alpha+1}n+\frac{(8j+1)p^{2\alpha}-1}{2}\right)\equiv 0 \pmod 2",
        alpha_min=0, alpha_min_stated=0, index_name="j", generator=_gen_b13_even_j),
    CatalogEntry(
        "b13-mod3", "b13", ("alpha",),
        ("alpha plays the role of the exponent l, l >= 2",),
        "b13(3^l n + (5*3^(l-1) - 1)/2) == 0 mod 3",
        r"b_{13}\left(3^{\ell}n+\frac{5\cdot 3^{\ell-1}-1}{2}\right)\equiv 0 \pmod 3",
        modulus=3, alpha_min=2, alpha_min_stated=2, members=_B13_MOD3, generator=_gen_members),
    CatalogEntry(
        "b13-mod6", "b13", ("alpha", "family"),
        ("alpha >= 1",),
        "b13(4*3^(2a+1) n + (17*3^(2a)-1)/2), b13(4*3^(2a) n + (11*3^(2a-1)-1)/2) == 0 mod 6",
        r"b_{13}\left(4\cdot 3^{2\alpha+1}n+\frac{17\cdot 3^{2\alpha}-1}{2}\right)\equiv 0 \pmod 6",
        modulus=6, alpha_min=1, alpha_min_stated=1, members=_B13_MOD6, generator=_gen_members),
    CatalogEntry(
        "b5-even-calkin", "b5", ("family",),
        (),
        "b5(20n+5) == b5(20n+13) == 0 mod 2",
        r"b_5(20n+5)\equiv b_5(20n+13)\equiv 0 \pmod 2",
        members=_CALKIN, generator=_gen_members),
    CatalogEntry(
        "b5-even-i", "b5", _PRIME_I,
        ("p prime, p >= 5", "(-10 / p) = -1", "alpha >= 1", "1 <= i <= p-1"),
        "b5(4 p^(2a) n + ((24i+7p) p^(2a-1) - 1)/6) == 0 mod 2",
        r"b_5\left(4p^{2\alpha}n+\frac{(24i+7p)p^{2\alpha-1}-1}{6}\right)\equiv 0 \pmod 2",
        alpha_min=1, alpha_min_stated=1, index_name="i", generator=_gen_b5_even_i,
        notes="the alpha = 1 case is the earlier single-prime family"),
    CatalogEntry(
        "b5-even-5power", "b5", ("alpha", "family"),
        ("alpha >= 0",),
        "b5(4*5^(2a+1) n + (31*5^(2a)-1)/6), b5(4*5^(2a+1) n + (79*5^(2a)-1)/6), "
        "b5(4*5^(2a+2) n + (83*5^(2a+1)-1)/6), b5(4*5^(2a+2) n + (107*5^(2a+1)-1)/6) == 0 mod 2",
        r"b_5\left(4\cdot 5^{2\alpha+1}n+\frac{31\cdot 5^{2\alpha}-1}{6}\right)\equiv 0 \pmod 2",
        alpha_min=0, alpha_min_stated=0, members=_B5_POWER, generator=_gen_members),
    CatalogEntry(
        "b8-even-i", "b8", _PRIME_I,
        ("p prime, p == -1 (mod 6)", "alpha >= 1", "1 <= i <= p-1"),
        "b8(p^(2a) n + ((24i+7p) p^(2a-1) - 7)/24) == 0 mod 2",
        r"b_8\left(p^{2\alpha}n+\frac{(24i+7p)p^{2\alpha-1}-7}{24}\right)\equiv 0 \pmod 2",
        alpha_min=1, alpha_min_stated=1, index_name="i", generator=_gen_b8_even_i),
    CatalogEntry(
        "b16-even-i", "b16", _PRIME_I,
        ("p prime, p == -1 (mod 4)", "alpha >= 0", "1 <= i <= p-1"),
        "b16(p^(2a+2) n + ((8i+5p) p^(2a+1) - 5)/8) == 0 mod 2",
        r"b_{16}\left(p^{2\alpha+2}n+\frac{(8i+5p)p^{2\alpha+1}-5}{8}\right)\equiv 0 \pmod 2",
        alpha_min=0, alpha_min_stated=0, index_name="i", generator=_gen_b16_even_i),
    CatalogEntry(
        "ramanujan-lift", "b_{l k}", ("k", "family"),
        ("k >= 1",),
        "b_{5k}(5n+4) == 0 mod 5, b_{7k}(7n+5) == 0 mod 7, b_{11k}(11n+6) == 0 mod 11, "
        "b_{25k}(25n+24) == 0 mod 25, b_{49k}(49n+47) == 0 mod 49",
        r"b_{5k}(5n+4)\equiv 0 \pmod 5",
        modulus=0, members=tuple(Member(0, ell, lambda a: 0, lambda a: 0, 1, uses_alpha=False)
                                 for ell, _, _ in _LIFT_BASES),
        generator=_gen_lift,
        notes="modulus differs per member; members 1-5 are the bases 5, 7, 11, 25, 49"),
    CatalogEntry(
        "combined-4", "b_l", ("alpha", "family"),
        ("alpha >= 0 (members 1-2 ship from alpha >= 1)",),
        "thirteen congruences for b5, b7, b10, b22, b25, b28, b49 with moduli 10..147",
        r"b_5\left(4\cdot 5^{2\alpha+2}n+\frac{31\cdot 5^{2\alpha}-1}{6}\right)\equiv 0 \pmod{10}",
        modulus=0, alpha_min=0, alpha_min_stated=0, members=_COMBINED4, generator=_gen_members,
        notes="members 1-2 at alpha = 0 are accepted as flagged erratum probes"),
    CatalogEntry(
        "fp-mod3", "b_l", ("alpha", "family"),
        ("alpha >= 0",),
        "fourteen mod 3 congruences for b7, b10, b19, b22, b25, b28, b34, b37, b43, b49",
        r"b_7\left(3^{2\alpha+2}n+\frac{11\cdot 3^{2\alpha+1}-1}{4}\right)\equiv 0 \pmod 3",
        modulus=3, alpha_min=0, alpha_min_stated=0, members=_FP_MOD3, generator=_gen_members),
    CatalogEntry(
        "sellers-parity", "b'_p", ("p", "r"),
        ("p prime, p >= 5", "1 <= r <= p-1", "(24r+1 / p) = -1"),
        "b'_p(p n + r) == 0 mod 2",
        r"b'_p(pn+r)\equiv 0 \pmod 2",
        index_name="r", generator=_gen_sellers),
)}


def get_entry(catalog_id: str) -> CatalogEntry:
    try:
        return CATALOG[catalog_id]
    except KeyError:
        raise HypothesisViolation(
            f"unknown catalog id {catalog_id!r}; known ids: {', '.join(CATALOG)}") from None


def catalog_document() -> dict[str, Any]:
    return {
        "schema_version": CATALOG_SCHEMA_VERSION,
        "entries": [e.to_dict() for e in CATALOG.values()],
    }


def family_claims(params: FamilyParams) -> list[CongruenceClaim]:
    """Concrete claims for ``params``, validated against the entry's hypotheses."""
    entry = get_entry(params.catalog_id)
    _reject_unused(entry, params)
    claims = entry.generator(entry, params)
    seen: set = set()
    out = []
    for c in claims:
        if c.key() not in seen:
            seen.add(c.key())
            out.append(c)
    return out


_J_RULES = {
    # entry id -> (c, smallest index); j is admissible when (c j + 1 / p) = -1
    "b2-even-j": (24, 0),
    "b2-multiprime-j": (24, 0),
    "b4-even-j": (8, 0),
    "b4-multiprime-j": (8, 0),
    "b13-even-j": (8, 0),
    "sellers-parity": (24, 1),
}


def admissible_j(catalog_id: str, p: int) -> tuple[int, ...]:
    """Indices ``j`` in range for which ``c j + 1`` is a non-residue mod p."""
    entry = get_entry(catalog_id)
    if catalog_id not in _J_RULES:
        raise HypothesisViolation(f"{catalog_id} has no j-type index")
    c, lo = _J_RULES[catalog_id]
    min_p = 3 if c == 8 else 5
    if p < min_p or not is_prime(p):
        raise HypothesisViolation(f"{entry.id} needs a prime p >= {min_p}, got {p}")
    return tuple(j for j in range(lo, p) if legendre(c * j + 1, p) == -1)


# -- regression grid ----------------------------------------------------------------


def regression_grid() -> list[FamilyParams]:
    """Every catalog instance with p <= 13, alpha <= 2 and k <= 3.

    b5-even-i admits no prime below 17, so it is exercised at p = 17.
    Multi-prime entries use ordered pairs from (5, 7, 11, 13).
    """
    grid: list[FamilyParams] = []

    def primes_for(lo: int, extra=lambda p: True):
        return [p for p in GRID_PRIMES if p >= lo and extra(p)]

    for cid, lo in (("b2-even-i", 5), ("b4-even-i", 3)):
        for p in primes_for(lo):
            for a in (1, 2):
                grid.append(FamilyParams(cid, p=p, alpha=a))
    for cid, lo in (("b2-even-j", 5), ("b4-even-j", 3), ("b13-even-i", 3), ("b13-even-j", 3)):
        for p in primes_for(lo):
            for a in (0, 1, 2):
                grid.append(FamilyParams(cid, p=p, alpha=a))
    for cid in ("b2-multiprime-i", "b2-multiprime-j", "b4-multiprime-i", "b4-multiprime-j"):
        for pair in product(GRID_MULTI_PRIMES, repeat=2):
            grid.append(FamilyParams(cid, primes=pair))
    for a in (0, 1, 2):
        grid.append(FamilyParams("ped-3", alpha=a))
        grid.append(FamilyParams("b5-even-5power", alpha=a))
        grid.append(FamilyParams("fp-mod3", alpha=a))
    for a in (1, 2):
        grid.append(FamilyParams("b13-mod6", alpha=a))
    for ell in (2, 3, 4):
        grid.append(FamilyParams("b13-mod3", alpha=ell))
    grid.append(FamilyParams("b5-even-calkin"))
    for a in (1, 2):
        grid.append(FamilyParams("b5-even-i", p=17, alpha=a))
    for p in primes_for(5, lambda p: p % 6 == 5):
        for a in (1, 2):
            grid.append(FamilyParams("b8-even-i", p=p, alpha=a))
    for p in primes_for(3, lambda p: p % 4 == 3):
        for a in (0, 1, 2):
            grid.append(FamilyParams("b16-even-i", p=p, alpha=a))
    for k in (1, 2, 3):
        grid.append(FamilyParams("ramanujan-lift", k=k))
    for number, mem in enumerate(_COMBINED4, start=1):
        alphas = range(mem.alpha_min, 2) if mem.uses_alpha else (None,)
        for a in alphas:
            grid.append(FamilyParams("combined-4", alpha=a, family=number))
    for p in primes_for(5):
        grid.append(FamilyParams("sellers-parity", p=p))
    return grid
