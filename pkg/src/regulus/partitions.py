"""Partition counting functions: p(n), b_l(n) and b'_p(n).

Every function has two routes: the series route (pentagonal inversion and
sparse products) and a small brute-force enumerator used only to check the
first.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import HypothesisViolation, SpecParseError
from .numtheory import is_prime
from .report import MatchReport
from .series import Series, invert, mul, reduce_mod, substitute_power
from .theta import EtaQuotientSpec, eta_quotient_series, euler_series, pentagonal_terms

__all__ = [
    "PartitionFunction",
    "partition_numbers",
    "b_ell_series",
    "b_p_prime_series",
    "function_series",
    "coefficients_at",
    "exact_value",
    "b_ell_enumerate",
    "b_p_prime_enumerate",
    "enumerate_value",
    "check_bp_prime_relation",
    "ENUMERATION_LIMIT",
]

ENUMERATION_LIMIT = 60


@dataclass(frozen=True, order=True)
class PartitionFunction:
    """Which partition function a series or claim is about.

    ``kind`` is ``"p"`` (unrestricted), ``"regular"`` (b_l, no part divisible
    by ``ell``) or ``"distinct_regular"`` (b'_p: distinct parts, none
    divisible by the prime ``ell``).
    """

    kind: str
    ell: int = 0

    def __post_init__(self):
        if self.kind == "p":
            if self.ell != 0:
                raise HypothesisViolation("p(n) takes no parameter")
        elif self.kind == "regular":
            if self.ell < 2:
                raise HypothesisViolation(f"b_l needs l >= 2, got {self.ell}")
        elif self.kind == "distinct_regular":
            if self.ell < 5 or not is_prime(self.ell):
                raise HypothesisViolation(f"b'_p needs a prime p >= 5, got {self.ell}")
        else:
            raise ValueError(f"unknown partition function kind {self.kind!r}")

    @classmethod
    def unrestricted(cls) -> "PartitionFunction":
        return cls("p")

    @classmethod
    def regular(cls, ell: int) -> "PartitionFunction":
        return cls("regular", ell)

    @classmethod
    def distinct_regular(cls, p: int) -> "PartitionFunction":
        return cls("distinct_regular", p)

    _TAG = re.compile(r"^(?:p|b(\d+)|b'(\d+)|bprime(\d+))$")

    @classmethod
    def parse(cls, text: str) -> "PartitionFunction":
        """Accepts ``p``, ``b5``, ``b'7`` or ``bprime7``."""
        m = cls._TAG.match(text.strip())
        if not m:
            raise SpecParseError(f"unknown partition function {text!r}")
        if m.group(1):
            return cls.regular(int(m.group(1)))
        if m.group(2) or m.group(3):
            return cls.distinct_regular(int(m.group(2) or m.group(3)))
        return cls.unrestricted()

    def __str__(self) -> str:
        if self.kind == "p":
            return "p"
        if self.kind == "regular":
            return f"b{self.ell}"
        return f"b'{self.ell}"


# -- p(n) table cache ----------------------------------------------------------
#
# Tables are keyed by modulus.  A request mod m can be served from any cached
# table whose modulus is a multiple of m (or from an exact table) that is long
# enough.  Construction happens under a lock; published tables are immutable.

_partition_cache: dict[int, Series] = {}
_partition_lock = threading.Lock()


def _cached_partitions(N: int, modulus: int) -> Series | None:
    for M, table in _partition_cache.items():
        if table.truncation < N:
            continue
        if M == modulus:
            return table.truncate(N)
        if modulus and (M == 0 or M % modulus == 0):
            return reduce_mod(table.truncate(N), modulus)
    return None


def partition_numbers(N: int, modulus: int = 0) -> Series:
    """``1/(q;q)_inf``: coefficient n is p(n), reduced mod ``modulus`` if set.

    Inverting the pentagonal series is Euler's recurrence
    ``p(n) = sum (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]``.
    """
    if N < 0:
        raise ValueError("truncation must be nonnegative")
    found = _cached_partitions(N, modulus)
    if found is not None:
        return found
    with _partition_lock:
        found = _cached_partitions(N, modulus)
        if found is not None:
            return found
        table = invert(euler_series(N, modulus))
        held = _partition_cache.get(modulus)
        if held is None or held.truncation < N:
            _partition_cache[modulus] = table
        return table


def clear_partition_cache() -> None:
    with _partition_lock:
        _partition_cache.clear()


def b_ell_series(ell: int, N: int, modulus: int = 0) -> Series:
    """``(q^l;q^l)/(q;q)`` as partition numbers times the sparse ``(q^l;q^l)``."""
    if ell < 2:
        raise HypothesisViolation(f"b_l needs l >= 2, got {ell}")
    stretched = substitute_power(euler_series(N // ell, modulus), ell, truncation=N)
    return mul(partition_numbers(N, modulus), stretched)


def b_p_prime_series(p: int, N: int, modulus: int = 0) -> Series:
    """``(-q;q)/(-q^p;q^p)``, with ``(-q;q) = (q^2;q^2)/(q;q)``."""
    PartitionFunction.distinct_regular(p)
    spec = EtaQuotientSpec(((1, -1), (2, 1), (p, 1), (2 * p, -1)))
    return eta_quotient_series(spec, N, modulus)


def function_series(fn: PartitionFunction, N: int, modulus: int = 0) -> Series:
    if fn.kind == "p":
        return partition_numbers(N, modulus)
    if fn.kind == "regular":
        return b_ell_series(fn.ell, N, modulus)
    return b_p_prime_series(fn.ell, N, modulus)


def _table_for(N: int, modulus: int) -> tuple[np.ndarray, int]:
    """A p(n) coefficient array of length > N, mod some multiple M of ``modulus``.

    Reuses a cached table without reducing it, so sampling a few entries from a
    long shared table stays cheap.
    """
    for M, table in list(_partition_cache.items()):
        if table.truncation < N:
            continue
        if M == modulus or (modulus and (M == 0 or M % modulus == 0)):
            return table.coeffs, M
    return partition_numbers(N, modulus).coeffs, modulus


def coefficients_at(fn: PartitionFunction, indices, modulus: int) -> list[int]:
    """Coefficients of ``fn`` at the given indices, mod ``modulus`` (0: exact).

    For p and b_l only the p(n) table is materialised; each b_l coefficient
    is the matching entry of the product with ``(q^l;q^l)``:
    ``b_l(n) = sum_k (-1)^k p(n - l g_k)`` over generalized pentagonal g_k.
    """
    indices = [int(i) for i in indices]
    idx = np.asarray(sorted(set(indices)), dtype=np.int64)
    if len(idx) == 0:
        return []
    if idx[0] < 0:
        raise ValueError("coefficient indices must be nonnegative")
    top = int(idx[-1])
    if fn.kind == "distinct_regular":
        s = b_p_prime_series(fn.ell, top, modulus)
        return [s[i] for i in indices]
    table, M = _table_for(top, modulus)
    if fn.kind == "p":
        vals = table[idx]
    else:
        acc = np.zeros(len(idx), dtype=table.dtype)
        for g, sign in pentagonal_terms(top // fn.ell):
            src = idx - fn.ell * g
            ok = src >= 0
            acc[ok] += sign * table[src[ok]]
        vals = acc
    if modulus:
        vals = vals % modulus
    lookup = {int(i): int(v) for i, v in zip(idx, vals)}
    return [lookup[i] for i in indices]


# exact single values ---------------------------------------------------------

EXACT_TABLE_LIMIT = 20_000


def _exact_p(n: int) -> int:
    if n < 0:
        return 0
    if n <= EXACT_TABLE_LIMIT:
        return partition_numbers(max(n, 0), 0)[n]
    from sympy.functions.combinatorial.numbers import partition  # exact, Rademacher series

    return int(partition(n))


def exact_value(fn: PartitionFunction, n: int) -> int:
    """Exact (non-modular) value of ``fn`` at ``n``."""
    if fn.kind == "p":
        return _exact_p(n)
    if fn.kind == "regular":
        return sum(sign * _exact_p(n - fn.ell * g) for g, sign in pentagonal_terms(n // fn.ell))
    if n > EXACT_TABLE_LIMIT:
        raise ValueError(f"exact b'_p values are only computed up to n = {EXACT_TABLE_LIMIT}")
    return b_p_prime_series(fn.ell, n)[n]


# -- enumeration oracles --------------------------------------------------------


def _guard(n: int) -> None:
    if n < 0 or n > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration oracle only covers 0 <= n <= {ENUMERATION_LIMIT}")


@lru_cache(maxsize=None)
def _count_parts(n: int, largest: int, ell: int, distinct: bool) -> int:
    # partitions of n into parts <= largest, skipping multiples of ell (ell=0: none)
    if n == 0:
        return 1
    total = 0
    for part in range(min(n, largest), 0, -1):
        if ell and part % ell == 0:
            continue
        total += _count_parts(n - part, part - 1 if distinct else part, ell, distinct)
    return total


def b_ell_enumerate(ell: int, n: int) -> int:
    """Count partitions of n with no part divisible by ell, by recursion."""
    _guard(n)
    if ell < 2:
        raise ValueError("need ell >= 2")
    return _count_parts(n, n, ell, False)


def b_p_prime_enumerate(p: int, n: int) -> int:
    _guard(n)
    return _count_parts(n, n, p, True)


def enumerate_value(fn: PartitionFunction, n: int) -> int:
    if fn.kind == "p":
        _guard(n)
        return _count_parts(n, n, 0, False)
    if fn.kind == "regular":
        return b_ell_enumerate(fn.ell, n)
    return b_p_prime_enumerate(fn.ell, n)


# -- b'_p versus b_p --------------------------------------------------------------


def check_bp_prime_relation(p: int, N: int) -> MatchReport:
    """Check ``b'_p(p n + (p^2-1)/24) == b_p(n) (mod 2)`` for ``n <= N``."""
    PartitionFunction.distinct_regular(p)
    offset, rem = divmod(p * p - 1, 24)
    if rem:
        raise HypothesisViolation(f"(p^2-1)/24 is not integral for p = {p}")
    distinct = b_p_prime_series(p, p * N + offset, 2)
    regular = b_ell_series(p, N, 2)
    picked = distinct.coeffs[offset::p][: N + 1]
    diff = np.flatnonzero(picked != regular.coeffs)
    name = f"bp-prime:{p}"
    details = {"p": p, "offset": offset}
    if len(diff):
        k = int(diff[0])
        return MatchReport(name, N, False, k, int(picked[k]), regular[k], details)
    return MatchReport(name, N, True, details=details)
