"""Numerical verification and discovery of congruences.

A claim ``f(A n + B) == 0 (mod m)`` is checked for ``n = 0 .. n_count-1`` by
sampling the coefficients of ``f`` at those arguments.  Work is bounded by a
truncation cap: a claim whose last argument exceeds it raises
:class:`TruncationBudgetExceeded` unless the caller asks for a partial scan.
Counterexamples are recomputed without a modulus and, for small arguments,
confirmed by brute-force enumeration.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import lcm

from .claims import CongruenceClaim, ScanResult
from .errors import TruncationBudgetExceeded
from .partitions import (
    ENUMERATION_LIMIT,
    PartitionFunction,
    coefficients_at,
    enumerate_value,
    exact_value,
    function_series,
    partition_numbers,
)
from .series import INT64_MODULUS_LIMIT

__all__ = [
    "DEFAULT_MAX_TRUNCATION",
    "CAP_ENV",
    "resolve_cap",
    "verify_claim",
    "verify_claims",
    "prewarm",
    "SearchConfig",
    "search_congruences",
    "EMPIRICAL_LABEL",
]

DEFAULT_MAX_TRUNCATION = 10_000_000
CAP_ENV = "REGULUS_MAX_TRUNCATION"
EMPIRICAL_LABEL = "empirical — unproven"
# shared p(n) tables are kept in int64 and packed into at most 8-byte slots
_SHARED_MODULUS_LIMIT = 1 << 20


def resolve_cap(explicit: int | None = None) -> int:
    """Explicit value, else the environment variable, else the default."""
    if explicit is not None:
        cap = explicit
    elif os.environ.get(CAP_ENV):
        try:
            cap = int(os.environ[CAP_ENV])
        except ValueError:
            raise ValueError(f"{CAP_ENV} must be an integer") from None
    else:
        cap = DEFAULT_MAX_TRUNCATION
    if cap < 1:
        raise ValueError("the truncation cap must be positive")
    return cap


def _feasible_count(claim: CongruenceClaim, cap: int) -> int:
    if claim.B > cap:
        return 0
    return (cap - claim.B) // claim.A + 1


def _counterexample(claim: CongruenceClaim, n: int, residue: int, checked: int,
                    requested: int, label: str, capped: bool) -> ScanResult:
    arg = claim.argument(n)
    exact = exact_value(claim.function, arg)
    if exact % claim.m != residue:
        raise AssertionError(
            f"modular and exact values disagree at {claim.function}({arg}): {residue} vs {exact}")
    oracle = enumerate_value(claim.function, arg) if arg <= ENUMERATION_LIMIT else None
    if oracle is not None and oracle != exact:
        raise AssertionError(f"enumeration disagrees at {claim.function}({arg}): {oracle} vs {exact}")
    return ScanResult(claim, checked, requested, n, residue, exact, oracle, label, capped)


def verify_claim(claim: CongruenceClaim, n_count: int, max_truncation: int | None = None,
                 partial: bool = False, label: str = "catalog") -> ScanResult:
    """Scan ``n = 0 .. n_count-1``; stop at the first nonzero residue.

    With ``partial=True`` an over-cap claim is scanned on the longest prefix
    that fits and the result is flagged ``capped``.
    """
    if n_count < 1:
        raise ValueError("n_count must be at least 1")
    cap = resolve_cap(max_truncation)
    count = n_count
    capped = False
    if claim.last_argument(n_count) > cap:
        if not partial:
            raise TruncationBudgetExceeded(
                f"{claim.describe()} needs coefficients up to {claim.last_argument(n_count)}, "
                f"above the cap {cap}")
        count = _feasible_count(claim, cap)
        capped = True
    if count == 0:
        return ScanResult(claim, 0, n_count, label=label, capped=True)
    args = [claim.argument(n) for n in range(count)]
    values = coefficients_at(claim.function, args, claim.m)
    for n, v in enumerate(values):
        if v:
            return _counterexample(claim, n, v, n + 1, n_count, label, capped)
    return ScanResult(claim, count, n_count, label=label, capped=capped)


def prewarm(claims, n_count: int, cap: int) -> int | None:
    """Build one p(n) table that serves every p/b_l claim in the batch.

    The table is taken mod the lcm of the claim moduli when that stays small,
    so later per-claim requests are answered from the cache.  Returns the
    modulus used, or None when nothing was built.
    """
    moduli = set()
    top = 0
    for c in claims:
        if c.function.kind == "distinct_regular":
            continue
        moduli.add(c.m)
        top = max(top, min(c.last_argument(n_count), cap))
    if not moduli:
        return None
    M = lcm(*moduli)
    if M >= min(_SHARED_MODULUS_LIMIT, INT64_MODULUS_LIMIT):
        return None
    partition_numbers(top, M)
    return M


def verify_claims(claims, n_count: int, max_truncation: int | None = None, jobs: int = 1,
                  partial: bool = False, label: str = "catalog") -> list[ScanResult]:
    """Verify a batch; results come back in input order for any ``jobs``.

    Without ``partial`` the whole batch is checked against the cap before any
    work starts.
    """
    claims = list(claims)
    cap = resolve_cap(max_truncation)
    if not partial:
        for c in claims:
            if c.last_argument(n_count) > cap:
                raise TruncationBudgetExceeded(
                    f"{c.describe()} needs coefficients up to {c.last_argument(n_count)}, "
                    f"above the cap {cap}")
    prewarm(claims, n_count, cap)

    def run(c):
        return verify_claim(c, n_count, cap, partial=partial, label=label)

    if jobs <= 1 or len(claims) <= 1:
        return [run(c) for c in claims]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run, claims))


# -- discovery ------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    function: PartitionFunction
    m: int
    A_max: int
    B_max: int | None = None
    n_count: int = 500

    def __post_init__(self):
        if self.A_max < 1:
            raise ValueError("A_max must be at least 1")
        if self.m < 2:
            raise ValueError("the modulus must be at least 2")
        if self.n_count < 1:
            raise ValueError("n_count must be at least 1")
        if self.B_max is not None and self.B_max < 1:
            raise ValueError("B_max must be at least 1")

    @property
    def truncation(self) -> int:
        return self.A_max * self.n_count - 1


def _implied(found: list[CongruenceClaim], A: int, B: int) -> bool:
    return any(A % c.A == 0 and B % c.A == c.B for c in found)


def search_congruences(config: SearchConfig, max_truncation: int | None = None) -> list[ScanResult]:
    """All ``(A, B)`` with ``A <= A_max`` and ``B < min(B_max, A)`` whose first
    ``n_count`` terms vanish mod m, minus those implied by a smaller find.

    Results are labelled empirical: they are observations, not proofs.  Every
    hit is checked against the enumeration oracle at arguments up to the
    oracle's limit; a disagreement raises.
    """
    cap = resolve_cap(max_truncation)
    if config.truncation > cap:
        raise TruncationBudgetExceeded(
            f"search needs coefficients up to {config.truncation}, above the cap {cap}")
    coeffs = function_series(config.function, config.truncation, config.m).coeffs
    found: list[CongruenceClaim] = []
    results = []
    for A in range(1, config.A_max + 1):
        b_top = A if config.B_max is None else min(config.B_max, A)
        for B in range(b_top):
            window = coeffs[B::A][: config.n_count]
            if window.any() or _implied(found, A, B):
                continue
            claim = CongruenceClaim(config.function, A, B, config.m,
                                    {"search": {"A_max": config.A_max, "n_count": config.n_count}})
            for n in range(config.n_count):
                arg = claim.argument(n)
                if arg > ENUMERATION_LIMIT:
                    break
                if enumerate_value(config.function, arg) % config.m:
                    raise AssertionError(f"search hit {claim.describe()} contradicts enumeration at {arg}")
            found.append(claim)
            results.append(ScanResult(claim, config.n_count, config.n_count, label=EMPIRICAL_LABEL))
    return results
