"""Truncated formal power series over Z or Z/m.

A :class:`Series` stores the coefficients of ``q^0 .. q^N`` and nothing
beyond.  Binary operations truncate to the shorter operand, so a result
never claims knowledge of a coefficient that was not determined by the
inputs.

Exact series (``modulus == 0``) keep Python integers in an object array
and never wrap.  Modular series keep residues in ``[0, m)``; for
``m < 2**31`` they live in ``int64`` arrays so the heavy products can run
vectorised.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Sequence

import gmpy2
import numpy as np

__all__ = [
    "Series",
    "ResidueComponents",
    "Comparison",
    "make_series",
    "zero_series",
    "one_series",
    "monomial",
    "add",
    "sub",
    "neg",
    "mul",
    "power",
    "invert",
    "shift",
    "scale",
    "substitute_power",
    "dissect",
    "reassemble",
    "reduce_mod",
    "compare",
]

# residues below this bound fit int64 with headroom for one product
INT64_MODULUS_LIMIT = 1 << 31

# product dispatch thresholds (tuned on a single core)
SPARSE_WORK_LIMIT = 20_000_000
KRONECKER_MIN_LENGTH = 1024
NEWTON_MIN_LENGTH = 512


def _uses_int64(modulus: int) -> bool:
    return 2 <= modulus < INT64_MODULUS_LIMIT


def _empty(n: int, modulus: int) -> np.ndarray:
    if _uses_int64(modulus):
        return np.zeros(n, dtype=np.int64)
    out = np.empty(n, dtype=object)
    out[:] = 0
    return out


def _canonical(values, modulus: int) -> np.ndarray:
    if isinstance(values, np.ndarray) and values.dtype != object:
        if modulus == 0:
            return np.array(values.tolist(), dtype=object)
        if _uses_int64(modulus):
            return np.mod(values.astype(np.int64, copy=False), modulus)
        values = values.tolist()
    elif isinstance(values, np.ndarray):
        values = values.tolist()
    if modulus == 0:
        out = np.empty(len(values), dtype=object)
        out[:] = [int(v) for v in values]
        return out
    if _uses_int64(modulus):
        return np.array([int(v) % modulus for v in values], dtype=np.int64)
    out = np.empty(len(values), dtype=object)
    out[:] = [int(v) % modulus for v in values]
    return out


class Series:
    """Immutable truncated power series ``sum_{n<=N} c_n q^n``."""

    __slots__ = ("_coeffs", "_modulus")

    def __init__(self, coeffs, modulus: int = 0):
        if modulus == 1 or modulus < 0:
            raise ValueError(f"modulus must be 0 or >= 2, got {modulus}")
        arr = _canonical(coeffs, modulus)
        arr.setflags(write=False)
        self._coeffs = arr
        self._modulus = int(modulus)

    @classmethod
    def _wrap(cls, arr: np.ndarray, modulus: int) -> "Series":
        # trusted constructor: arr must already be canonical for modulus
        obj = cls.__new__(cls)
        arr.setflags(write=False)
        obj._coeffs = arr
        obj._modulus = modulus
        return obj

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def modulus(self) -> int:
        return self._modulus

    @property
    def truncation(self) -> int:
        return len(self._coeffs) - 1

    @property
    def exact(self) -> bool:
        return self._modulus == 0

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, n):
        if isinstance(n, slice):
            return [int(c) for c in self._coeffs[n]]
        if n < 0 or n > self.truncation:
            raise IndexError(f"coefficient q^{n} is beyond truncation {self.truncation}")
        return int(self._coeffs[n])

    def tolist(self) -> list[int]:
        return [int(c) for c in self._coeffs]

    def nonzero_terms(self) -> list[tuple[int, int]]:
        idx = np.flatnonzero(self._coeffs != 0)
        return [(int(i), int(self._coeffs[i])) for i in idx]

    def support(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self._coeffs != 0)]

    def is_zero(self) -> bool:
        return not np.any(self._coeffs != 0)

    def truncate(self, n: int) -> "Series":
        """Drop every coefficient above ``q^n``."""
        if n >= self.truncation:
            return self
        return Series._wrap(self._coeffs[: n + 1].copy(), self._modulus)

    def __repr__(self) -> str:
        head = ", ".join(str(int(c)) for c in self._coeffs[:12])
        more = ", ..." if len(self._coeffs) > 12 else ""
        mod = f", mod {self._modulus}" if self._modulus else ""
        return f"Series([{head}{more}], N={self.truncation}{mod})"

    def __add__(self, other):
        return add(self, _promote(other, self))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _promote(other, self))

    def __rsub__(self, other):
        return sub(_promote(other, self), self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        return scale(self, other)

    def __rmul__(self, other):
        return scale(self, other)

    def __pow__(self, e: int):
        return power(self, e)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return compare(self, other).equal

    __hash__ = None


def _promote(value, like: Series) -> Series:
    if isinstance(value, Series):
        return value
    arr = _empty(like.truncation + 1, like.modulus)
    arr[0] = int(value) % like.modulus if like.modulus else int(value)
    return Series._wrap(arr, like.modulus)


def make_series(coeffs: Sequence[int], modulus: int = 0) -> Series:
    if len(coeffs) == 0:
        raise ValueError("a series needs at least one coefficient")
    return Series(coeffs, modulus)


def zero_series(N: int, modulus: int = 0) -> Series:
    return Series._wrap(_empty(N + 1, modulus), modulus)


def one_series(N: int, modulus: int = 0) -> Series:
    return monomial(0, 1, N, modulus)


def monomial(exponent: int, coeff: int, N: int, modulus: int = 0) -> Series:
    """``coeff * q^exponent`` truncated at ``q^N`` (zero if exponent > N)."""
    arr = _empty(N + 1, modulus)
    if 0 <= exponent <= N:
        arr[exponent] = coeff % modulus if modulus else int(coeff)
    return Series._wrap(arr, modulus)


def _common_modulus(a: Series, b: Series) -> int:
    if a.modulus == b.modulus:
        return a.modulus
    if a.modulus == 0:
        return b.modulus
    if b.modulus == 0:
        return a.modulus
    raise ValueError(f"incompatible moduli {a.modulus} and {b.modulus}")


def _aligned(a: Series, b: Series) -> tuple[np.ndarray, np.ndarray, int, int]:
    m = _common_modulus(a, b)
    n = min(len(a), len(b))
    A = a.coeffs[:n] if a.modulus == m else reduce_mod(a, m).coeffs[:n]
    B = b.coeffs[:n] if b.modulus == m else reduce_mod(b, m).coeffs[:n]
    return A, B, n, m


def add(a: Series, b: Series) -> Series:
    A, B, _, m = _aligned(a, b)
    out = A + B
    if m:
        out %= m
    return Series._wrap(out, m)


def sub(a: Series, b: Series) -> Series:
    A, B, _, m = _aligned(a, b)
    out = A - B
    if m:
        out %= m
    return Series._wrap(out, m)


def neg(a: Series) -> Series:
    out = -a.coeffs
    if a.modulus:
        out %= a.modulus
    return Series._wrap(out, a.modulus)


def scale(a: Series, c: int) -> Series:
    out = a.coeffs * int(c)
    if a.modulus:
        out %= a.modulus
    return Series._wrap(out, a.modulus)


def shift(a: Series, k: int) -> Series:
    """Multiply by ``q^k`` keeping the truncation of ``a``."""
    if k < 0:
        raise ValueError("shift exponent must be nonnegative")
    out = _empty(len(a), a.modulus)
    if k < len(a):
        out[k:] = a.coeffs[: len(a) - k]
    return Series._wrap(out, a.modulus)


# -- products ---------------------------------------------------------------


def _sparse_terms(arr: np.ndarray) -> list[tuple[int, int]]:
    idx = np.flatnonzero(arr != 0)
    return [(int(i), int(arr[i])) for i in idx]


def _mul_sparse(dense: np.ndarray, terms, n: int, m: int) -> np.ndarray:
    out = _empty(n, m)
    if _uses_int64(m):
        # accumulate several shifted rows before reducing, staying below 2**63
        batch = max(1, ((1 << 63) - 1) // max(1, (m - 1) ** 2) - 1)
        pending = 0
        for e, c in terms:
            if e >= n:
                break
            out[e:] += c * dense[: n - e]
            pending += 1
            if pending == batch:
                out %= m
                pending = 0
        out %= m
        return out
    for e, c in terms:
        if e >= n:
            break
        out[e:] += c * dense[: n - e]
    if m:
        out %= m
    return out


def _slot_bytes(m: int, n: int) -> int:
    bits = 2 * (m - 1).bit_length() + n.bit_length() + 1
    return (bits + 7) // 8


def _pack(arr: np.ndarray, width: int):
    buf = np.zeros((len(arr), 8), dtype=np.uint8)
    buf[:] = arr.astype(np.uint64).view(np.uint8).reshape(-1, 8)
    return gmpy2.from_binary(b"\x01\x01" + buf[:, :width].tobytes())


def _unpack(z, n: int, width: int) -> np.ndarray:
    raw = gmpy2.to_binary(z)[2:] if z else b""
    need = n * width
    if len(raw) < need:
        raw = raw + bytes(need - len(raw))
    slots = np.frombuffer(raw[:need], dtype=np.uint8).reshape(n, width)
    wide = np.zeros((n, 8), dtype=np.uint8)
    wide[:, :width] = slots
    return wide.view(np.uint64).reshape(n)


def _mul_kronecker(A: np.ndarray, B: np.ndarray, n: int, m: int) -> np.ndarray:
    # pack residues into one big integer per factor and let GMP multiply;
    # slots are wide enough that no partial sum can carry into a neighbour
    width = _slot_bytes(m, min(len(A), len(B)))
    prod = _pack(A, width) * _pack(B, width)
    out = _unpack(prod, n, width) % np.uint64(m)
    return out.astype(np.int64)


def _mul_schoolbook(A: np.ndarray, B: np.ndarray, n: int, m: int) -> np.ndarray:
    if _uses_int64(m) and min(len(A), len(B)) * (m - 1) ** 2 < (1 << 62):
        out = np.convolve(A, B)[:n]
        return out % m
    if A.dtype != object:
        A = A.astype(object)
        B = B.astype(object)
    out = np.convolve(A, B)[:n].copy()
    if m:
        out %= m
    return out


def _fit(arr: np.ndarray, n: int, m: int) -> np.ndarray:
    if len(arr) >= n:
        return arr[:n]
    out = _empty(n, m)
    out[: len(arr)] = arr
    return out


def _mul_arrays(A: np.ndarray, B: np.ndarray, n: int, m: int) -> np.ndarray:
    A = _fit(A, n, m)
    B = _fit(B, n, m)
    nnz_a = int(np.count_nonzero(A))
    nnz_b = int(np.count_nonzero(B))
    if nnz_a == 0 or nnz_b == 0:
        return _empty(n, m)
    if nnz_a > nnz_b:
        A, B, nnz_a, nnz_b = B, A, nnz_b, nnz_a
    # A is now the sparser factor
    if _uses_int64(m):
        if nnz_a <= 16 or nnz_a * n <= SPARSE_WORK_LIMIT:
            return _mul_sparse(B, _sparse_terms(A), n, m)
        if n >= KRONECKER_MIN_LENGTH and _slot_bytes(m, n) <= 8:
            return _mul_kronecker(A, B, n, m)
        return _mul_schoolbook(A, B, n, m)
    if 4 * nnz_a <= n:
        return _mul_sparse(B, _sparse_terms(A), n, m)
    return _mul_schoolbook(A, B, n, m)


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at the shorter operand."""
    A, B, n, m = _aligned(a, b)
    return Series._wrap(_mul_arrays(A, B, n, m), m)


def power(a: Series, e: int) -> Series:
    if e < 0:
        return power(invert(a), -e)
    result = one_series(a.truncation, a.modulus)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


# -- inversion --------------------------------------------------------------


def _unit_inverse(c: int, m: int) -> int:
    if m == 0:
        if c not in (1, -1):
            raise ValueError(f"constant term {c} is not a unit in Z")
        return c
    if gcd(c, m) != 1:
        raise ValueError(f"constant term {c} is not invertible mod {m}")
    return pow(c, -1, m)


def _invert_sequential(A: np.ndarray, n: int, m: int, u: int) -> np.ndarray:
    terms = [(e, c) for e, c in _sparse_terms(A[:n]) if e > 0]
    x = [0] * n
    x[0] = u
    if 4 * len(terms) <= n:
        for i in range(1, n):
            s = 0
            for e, c in terms:
                if e > i:
                    break
                s += c * x[i - e]
            x[i] = (-u * s) % m if m else -u * s
    else:
        a = [int(v) for v in A[:n]]
        for i in range(1, n):
            s = sum(a[k] * x[i - k] for k in range(1, i + 1) if a[k])
            x[i] = (-u * s) % m if m else -u * s
    return _canonical(x, m)


def _invert_newton(A: np.ndarray, n: int, m: int, u: int) -> np.ndarray:
    # x <- x (2 - a x) doubles the number of correct coefficients; valid in any
    # commutative ring once the constant term is inverted
    x = np.array([u], dtype=np.int64)
    k = 1
    while k < n:
        k = min(2 * k, n)
        ax = _mul_arrays(A[:k], x, k, m)
        corr = (-ax) % m
        corr[0] = (corr[0] + 2) % m
        x = _mul_arrays(x, corr, k, m)
    return x


def invert(a: Series) -> Series:
    """Multiplicative inverse up to the truncation of ``a``."""
    m = a.modulus
    u = _unit_inverse(int(a.coeffs[0]), m)
    n = len(a)
    if _uses_int64(m) and n > NEWTON_MIN_LENGTH:
        out = _invert_newton(a.coeffs, n, m, u)
    else:
        out = _invert_sequential(a.coeffs, n, m, u)
    return Series._wrap(out, m)


# -- reindexing -------------------------------------------------------------


def substitute_power(a: Series, k: int, truncation: int | None = None) -> Series:
    """``a(q^k)``.

    The result keeps the truncation of ``a`` unless ``truncation`` is given;
    anything up to ``k*(N+1) - 1`` is determined by the input.
    """
    if k < 1:
        raise ValueError("substitution exponent must be >= 1")
    N = a.truncation if truncation is None else truncation
    if N > k * (a.truncation + 1) - 1:
        raise ValueError(f"a(q^{k}) is only known up to q^{k * (a.truncation + 1) - 1}")
    if k == 1:
        return a.truncate(N)
    out = _empty(N + 1, a.modulus)
    src = a.coeffs[: N // k + 1]
    out[: k * len(src) : k] = src
    return Series._wrap(out, a.modulus)


@dataclass(frozen=True)
class ResidueComponents:
    """``parts[r]`` holds ``sum_n c_{p n + r} q^n``."""

    prime: int
    parts: tuple[Series, ...]

    def reassemble(self) -> Series:
        return reassemble(self)


def dissect(a: Series, p: int) -> ResidueComponents:
    if p < 1:
        raise ValueError("dissection modulus must be positive")
    parts = tuple(Series._wrap(a.coeffs[r::p].copy(), a.modulus) for r in range(p))
    return ResidueComponents(p, parts)


def reassemble(components: ResidueComponents) -> Series:
    p = components.prime
    parts = components.parts
    n = sum(len(s) for s in parts)
    m = parts[0].modulus
    out = _empty(n, m)
    for r, s in enumerate(parts):
        out[r::p] = s.coeffs
    return Series._wrap(out, m)


def reduce_mod(a: Series, m: int) -> Series:
    if m < 2:
        raise ValueError(f"cannot reduce modulo {m}")
    if a.modulus and a.modulus % m:
        raise ValueError(f"{m} does not divide the existing modulus {a.modulus}")
    if a.modulus == m:
        return a
    arr = a.coeffs
    if _uses_int64(m):
        if arr.dtype == object:
            arr = np.array([int(c) % m for c in arr], dtype=np.int64)
        else:
            arr = arr % m
        return Series._wrap(arr, m)
    out = arr % m
    return Series._wrap(out, m)


class Comparison(NamedTuple):
    equal: bool
    truncation: int
    first_mismatch: int | None


def compare(a: Series, b: Series) -> Comparison:
    """Compare up to the shorter truncation; moduli must agree for equality."""
    n = min(len(a), len(b))
    if a.modulus != b.modulus:
        return Comparison(False, n - 1, None)
    diff = np.flatnonzero(a.coeffs[:n] != b.coeffs[:n])
    if len(diff):
        return Comparison(False, n - 1, int(diff[0]))
    return Comparison(True, n - 1, None)


def series_sum(terms: Iterable[Series]) -> Series:
    it = iter(terms)
    total = next(it)
    for t in it:
        total = add(total, t)
    return total
