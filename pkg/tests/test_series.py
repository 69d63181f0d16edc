import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from regulus.series import (
    Series,
    compare,
    dissect,
    invert,
    make_series,
    monomial,
    mul,
    one_series,
    power,
    reassemble,
    reduce_mod,
    shift,
    substitute_power,
    zero_series,
)
from regulus import series as series_mod

MODULI = [0, 2, 3, 10, 147, 80850, (1 << 31) + 11]


@st.composite
def series_triples(draw, max_len=24):
    m = draw(st.sampled_from(MODULI))
    n = draw(st.integers(1, max_len))
    bound = 10**6 if m == 0 else m - 1
    lo = -bound if m == 0 else 0
    coeffs = st.lists(st.integers(lo, bound), min_size=n, max_size=n)
    return m, [make_series(draw(coeffs), m) for _ in range(3)]


def naive_mul(a, b, m):
    n = len(a)
    out = [0] * n
    for i, x in enumerate(a):
        for j, y in enumerate(b[: n - i]):
            out[i + j] += x * y
    return [c % m for c in out] if m else out


@settings(max_examples=80, deadline=None)
@given(series_triples())
def test_ring_laws(data):
    m, (a, b, c) = data
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + zero_series(a.truncation, m) == a
    assert a * one_series(a.truncation, m) == a
    assert a - a == zero_series(a.truncation, m)


@settings(max_examples=80, deadline=None)
@given(series_triples())
def test_product_matches_schoolbook_definition(data):
    m, (a, b, _) = data
    assert (a * b).tolist() == naive_mul(a.tolist(), b.tolist(), m)


@settings(max_examples=60, deadline=None)
@given(series_triples(), st.sampled_from([2, 3, 5, 7, 10]))
def test_reduce_mod_is_a_ring_homomorphism(data, d):
    m, (a, b, _) = data
    if m and m % d:
        d = m
    if d < 2:
        return
    assert reduce_mod(a + b, d) == reduce_mod(a, d) + reduce_mod(b, d)
    assert reduce_mod(a * b, d) == reduce_mod(a, d) * reduce_mod(b, d)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=1, max_size=80), st.integers(2, 32))
def test_dissect_round_trip(coeffs, p):
    a = make_series(coeffs)
    parts = dissect(a, p)
    assert len(parts.parts) == p
    assert reassemble(parts) == a


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([0, 2, 9, 147, 80850]), st.lists(st.integers(0, 10**4), min_size=1, max_size=40))
def test_inverse_is_two_sided(m, tail):
    a = make_series([1] + tail, m)
    inv = invert(a)
    one = one_series(a.truncation, m)
    assert a * inv == one
    assert inv * a == one


def test_inverse_needs_a_unit_constant_term():
    with pytest.raises(ValueError):
        invert(make_series([2, 1, 1]))
    with pytest.raises(ValueError):
        invert(make_series([3, 1], 6))
    assert invert(make_series([5, 1], 6))[0] == 5


@pytest.mark.parametrize("m", [2, 147, 80850])
def test_product_paths_agree(m):
    rng = np.random.default_rng(7)
    n = 3000
    A = make_series(rng.integers(0, m, n).tolist(), m).coeffs
    B = make_series(rng.integers(0, m, n).tolist(), m).coeffs
    kron = series_mod._mul_kronecker(A, B, n, m)
    school = series_mod._mul_schoolbook(A, B, n, m)
    sparse = series_mod._mul_sparse(B, series_mod._sparse_terms(A), n, m)
    assert np.array_equal(kron, school)
    assert np.array_equal(sparse, school)


def test_wide_modulus_product_matches_definition():
    m = (1 << 31) + 11
    rng = np.random.default_rng(3)
    a = [int(x) for x in rng.integers(0, 10**9, 300)]
    b = [int(x) for x in rng.integers(0, 10**9, 300)]
    assert (make_series(a, m) * make_series(b, m)).tolist() == naive_mul(a, b, m)


def test_newton_inverse_matches_recurrence():
    from regulus.theta import euler_series

    e = euler_series(4000, 147)
    n = e.truncation + 1
    newton = series_mod._invert_newton(e.coeffs, n, 147, 1)
    seq = series_mod._invert_sequential(e.coeffs, n, 147, 1)
    assert np.array_equal(newton, seq)


def test_series_is_immutable():
    a = make_series([1, 2, 3])
    with pytest.raises(ValueError):
        a.coeffs[0] = 5
    with pytest.raises(TypeError):
        hash(a)


def test_mixed_moduli():
    exact = make_series([3, 4, 5])
    mod = make_series([1, 1, 1], 2)
    assert (exact + mod).modulus == 2
    with pytest.raises(ValueError):
        make_series([1], 3) + make_series([1], 5)
    assert not compare(make_series([1], 3), make_series([1], 5)).equal


def test_truncation_follows_the_shorter_operand():
    a = make_series([1, 1, 1, 1, 1])
    b = make_series([1, 1])
    assert (a * b).truncation == 1


def test_shift_monomial_and_power():
    assert shift(make_series([1, 2, 3]), 1).tolist() == [0, 1, 2]
    assert monomial(2, 7, 4).tolist() == [0, 0, 7, 0, 0]
    x = make_series([1, 1, 0, 0, 0, 0])
    assert power(x, 5).tolist() == [1, 5, 10, 10, 5, 1]
    assert power(x, -1).tolist() == [1, -1, 1, -1, 1, -1]


def test_substitute_power():
    a = make_series([1, 2, 3])
    assert substitute_power(a, 3).tolist() == [1, 0, 0]
    assert substitute_power(a, 3, truncation=8).tolist() == [1, 0, 0, 2, 0, 0, 3, 0, 0]
    assert substitute_power(a, 2, truncation=3).tolist() == [1, 0, 2, 0]
    with pytest.raises(ValueError):
        substitute_power(a, 3, truncation=9)


def test_reduce_mod_rejects_non_divisors():
    with pytest.raises(ValueError):
        reduce_mod(make_series([1, 2], 10), 3)
    with pytest.raises(ValueError):
        reduce_mod(make_series([1, 2]), 1)
    assert reduce_mod(make_series([7, 12], 10), 5).tolist() == [2, 2]


def test_empty_series_rejected():
    with pytest.raises(ValueError):
        make_series([])


def test_indexing():
    a = make_series(list(range(10)), 7)
    assert a[9] == 2
    assert a[2:5] == [2, 3, 4]
    assert isinstance(a, Series) and a.support() == [1, 2, 3, 4, 5, 6, 8, 9]
