import threading

import pytest
from hypothesis import given, settings, strategies as st

from regulus.errors import HypothesisViolation, SpecParseError
from regulus.partitions import (
    ENUMERATION_LIMIT,
    PartitionFunction,
    b_ell_enumerate,
    b_ell_series,
    b_p_prime_enumerate,
    b_p_prime_series,
    check_bp_prime_relation,
    clear_partition_cache,
    coefficients_at,
    enumerate_value,
    exact_value,
    function_series,
    partition_numbers,
)

P_HEAD = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partition_numbers_head():
    assert partition_numbers(10).tolist() == P_HEAD
    assert partition_numbers(10, 3).tolist() == [v % 3 for v in P_HEAD]


def test_p_of_200():
    assert partition_numbers(200)[200] == 3972999029388


@pytest.mark.parametrize("ell", [2, 3, 4, 5, 8, 13, 16])
def test_b_ell_matches_enumeration(ell):
    series = b_ell_series(ell, 40)
    assert series.tolist() == [b_ell_enumerate(ell, n) for n in range(41)]


@pytest.mark.parametrize("p", [5, 7, 11])
def test_b_p_prime_matches_enumeration(p):
    series = b_p_prime_series(p, 40)
    assert series.tolist() == [b_p_prime_enumerate(p, n) for n in range(41)]


def test_pinned_values():
    assert b_ell_series(2, 9).tolist() == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8]
    assert exact_value(PartitionFunction.regular(5), 5) == 6
    assert exact_value(PartitionFunction.regular(13), 7) == 15


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 5, 7, 13, 49]), st.lists(st.integers(0, 3000), min_size=1, max_size=20),
       st.sampled_from([2, 3, 10, 147]))
def test_sampled_coefficients_match_dense_series(ell, idx, m):
    fn = PartitionFunction.regular(ell)
    dense = b_ell_series(ell, max(idx), m)
    assert coefficients_at(fn, idx, m) == [dense[i] for i in idx]


def test_sampling_reuses_a_table_mod_a_multiple():
    clear_partition_cache()
    partition_numbers(5000, 80850)
    fn = PartitionFunction.regular(5)
    vals = coefficients_at(fn, [5, 13, 4999], 10)
    assert vals == [exact_value(fn, n) % 10 for n in (5, 13, 4999)]
    clear_partition_cache()


def test_exact_value_beyond_the_table_uses_the_closed_formula():
    # p(20050) from the recurrence mod a large prime agrees with the exact value
    exact = exact_value(PartitionFunction.unrestricted(), 20050)
    assert partition_numbers(20050, 1_000_003)[20050] == exact % 1_000_003


def test_concurrent_table_builds_agree():
    clear_partition_cache()
    out = []

    def work():
        out.append(partition_numbers(3000, 7).tolist())

    threads = [threading.Thread(target=work) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(o == out[0] for o in out)
    clear_partition_cache()


def test_bp_prime_relation():
    for p in (5, 7):
        assert check_bp_prime_relation(p, 300).matched


@pytest.mark.parametrize("text,expected", [
    ("p", PartitionFunction.unrestricted()),
    ("b5", PartitionFunction.regular(5)),
    ("b'7", PartitionFunction.distinct_regular(7)),
    ("bprime11", PartitionFunction.distinct_regular(11)),
])
def test_parse(text, expected):
    assert PartitionFunction.parse(text) == expected
    assert PartitionFunction.parse(str(expected)) == expected


def test_parse_and_hypotheses():
    with pytest.raises(SpecParseError):
        PartitionFunction.parse("c5")
    with pytest.raises(HypothesisViolation):
        PartitionFunction.regular(1)
    with pytest.raises(HypothesisViolation):
        PartitionFunction.distinct_regular(9)


def test_enumeration_is_bounded():
    with pytest.raises(ValueError):
        enumerate_value(PartitionFunction.regular(5), ENUMERATION_LIMIT + 1)


def test_function_series_dispatch():
    assert function_series(PartitionFunction.unrestricted(), 10).tolist() == P_HEAD
    assert function_series(PartitionFunction.regular(2), 9).tolist() == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8]
