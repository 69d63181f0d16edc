import pytest

from regulus.dissection import (
    disjointness_check,
    f_dissection,
    psi_dissection,
    special_k,
    support_classes,
)
from regulus.errors import HypothesisViolation
from regulus.numtheory import primes_upto

ODD_PRIMES = [p for p in primes_upto(40) if p > 2]


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_psi_dissection_replays(p):
    report = psi_dissection(p, max(p * p, 400))
    assert report.match.matched
    assert all(report.class_parts_nonzero.values())
    assert report.special_class == (p * p - 1) // 8 % p


@pytest.mark.parametrize("p", [p for p in ODD_PRIMES if p >= 5])
def test_f_dissection_replays(p):
    report = f_dissection(p, max(3 * p * p, 400))
    assert report.match.matched
    assert len(report.components) == p - 1 + 1
    assert report.special_class == (p * p - 1) // 24 % p


def test_supports():
    assert support_classes("psi", 5) == {0, 1, 3}
    assert support_classes("psi", 7) == {0, 1, 3, 6}
    assert support_classes("f_neg", 5) == {0, 1, 2}
    assert support_classes("f_neg", 7) == {0, 1, 2, 5}


def test_special_indices():
    assert special_k(5) == -1
    assert special_k(7) == 1
    assert special_k(17) == -3


def test_component_descriptions():
    comps = psi_dissection(7).components
    assert [c.describe() for c in comps] == [
        "q^0*f(q^28, q^21)", "q^1*f(q^35, q^14)", "q^3*f(q^42, q^7)", "q^6*psi(q^49)"]
    assert f_dissection(5).components[-1].describe() == "-q^1*f(-q^25)"


@pytest.mark.parametrize("p", [p for p in primes_upto(97) if p > 2])
def test_disjointness(p):
    assert disjointness_check("psi", p)
    if p >= 5:
        assert disjointness_check("f_neg", p)


def test_hypotheses():
    with pytest.raises(HypothesisViolation):
        psi_dissection(9)
    with pytest.raises(HypothesisViolation):
        f_dissection(3)
    with pytest.raises(HypothesisViolation):
        psi_dissection(7, 40)
    with pytest.raises(ValueError):
        support_classes("phi", 5)
