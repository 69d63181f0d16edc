"""Acceptance suite: one recorded PASS/FAIL line per criterion.

Exactness criteria use tolerance zero.  Runtime bounds are asserted as
stated; the caches are cleared first so timings start cold.
"""

import time

import pytest

from regulus.catalog import FamilyParams, admissible_j, family_claims, regression_grid
from regulus.coverage import (
    kmj_cover_check,
    qualifying_primes,
    representable_check,
    uniqueness_check,
)
from regulus.dissection import disjointness_check, f_dissection, psi_dissection, support_classes
from regulus.engine import SearchConfig, resolve_cap, search_congruences, verify_claim, verify_claims
from regulus.errors import TruncationBudgetExceeded
from regulus.numtheory import primes_upto
from regulus.partitions import (
    PartitionFunction,
    b_ell_enumerate,
    b_ell_series,
    check_bp_prime_relation,
    clear_partition_cache,
    enumerate_value,
    exact_value,
)
from regulus.theta import (
    ramanujan5_check,
    verify_euler_product,
    verify_jacobi_cube,
    verify_jtp,
    verify_quintuple,
)

GRID_COUNT = 200


def grid_claims():
    seen = {}
    for fp in regression_grid():
        for c in family_claims(fp):
            seen.setdefault(c.key(), c)
    return list(seen.values())


def test_criterion_1_dissections(record):
    start = time.perf_counter()
    failures = []
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if not psi_dissection(p, max(3 * p * p, 600)).match.matched:
            failures.append(f"psi:{p}")
    for p in (5, 7, 11, 13, 17, 19, 23, 29, 31):
        if not f_dissection(p, max(3 * p * p, 600)).match.matched:
            failures.append(f"f:{p}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 5
    record("1 dissection identities", ok, f"failures={failures} time={elapsed:.2f}s (<5s)")
    assert ok


def test_criterion_2_classical_identities(record):
    start = time.perf_counter()
    N = 500
    reports = [verify_euler_product(N), verify_jacobi_cube(N)]
    reports += [verify_jtp(t, s, N) for t in (1, 2) for s in (1, -1)]
    reports += [verify_quintuple(u, v, N) for u in (1, 2) for v in (1, 2)]
    r5 = ramanujan5_check(N)
    reports += [r5.report, r5.replay]
    elapsed = time.perf_counter() - start
    bad = [r.identity for r in reports if not r.matched]
    ok = not bad and elapsed < 2
    record("2 classical identities", ok, f"{len(reports)} checks, failures={bad} time={elapsed:.2f}s (<2s)")
    assert ok


def test_criterion_3_regression_grid_within_cap(record):
    clear_partition_cache()
    claims = grid_claims()
    cap = resolve_cap()
    start = time.perf_counter()
    results = verify_claims(claims, GRID_COUNT, cap, partial=True)
    elapsed = time.perf_counter() - start
    counter = [r for r in results if not r.verified]
    full = sum(1 for r in results if not r.capped)
    prefix = [r for r in results if r.capped and r.scanned]
    unscanned = [r for r in results if not r.scanned]
    ok = not counter and elapsed < 60
    record("3 regression grid (cap)", ok,
           f"{len(results)} claims: {full} verified at n_count={GRID_COUNT}; over the {cap:.0e} cap, "
           f"{len(prefix)} verified on a prefix and {len(unscanned)} have B beyond the cap; "
           f"counterexamples={len(counter)} time={elapsed:.1f}s (<60s)")
    assert ok


@pytest.mark.xfail(raises=TruncationBudgetExceeded, strict=True,
                   reason="some grid instances need up to 3.9e9 coefficients at n_count = 200")
def test_criterion_3_every_instance_at_full_count(record):
    claims = grid_claims()
    cap = resolve_cap()
    worst = max(claims, key=lambda c: c.last_argument(GRID_COUNT))
    over = sum(1 for c in claims if c.last_argument(GRID_COUNT) > cap)
    record("3 regression grid (literal)", over == 0,
           f"{over} of {len(claims)} claims exceed the cap; largest needs "
           f"{worst.last_argument(GRID_COUNT):.2e} coefficients ({worst.describe()})")
    verify_claims(claims, GRID_COUNT, cap)


def test_criterion_4_erratum_probe(record):
    clear_partition_cache()
    start = time.perf_counter()
    b5 = PartitionFunction.regular(5)
    probe = [verify_claim(c, 50) for fam in (1, 2)
             for c in family_claims(FamilyParams("combined-4", alpha=0, family=fam))]
    first = probe[0]
    probe_ok = (
        not first.verified and first.counterexample_n == 0 and first.claim.argument(0) == 5
        and first.exact_value == 6 and first.oracle_value == 6 and first.residue == 6
        and exact_value(b5, 5) == 6 and enumerate_value(b5, 5) == 6
        and not probe[1].verified
    )
    shipped = [verify_claim(c, 50) for fam in (1, 2)
               for c in family_claims(FamilyParams("combined-4", alpha=1, family=fam))]
    elapsed = time.perf_counter() - start
    ok = probe_ok and all(r.verified and r.n_checked == 50 for r in shipped) and elapsed < 30
    record("4 erratum probe", ok,
           f"alpha=0: {first.claim.describe()} fails at n=0 with b5(5)={first.exact_value}; "
           f"alpha=1 families 1-2 verified to n=50; time={elapsed:.2f}s (<30s)")
    assert ok


def test_criterion_5_oracle_equivalence(record):
    start = time.perf_counter()
    bad = []
    for ell in (2, 4, 5, 8, 13, 16):
        if b_ell_series(ell, 40).tolist() != [b_ell_enumerate(ell, n) for n in range(41)]:
            bad.append(ell)
    pinned = (
        b_ell_series(2, 9).tolist() == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8]
        and b_ell_series(5, 5)[5] == 6
        and b_ell_series(13, 7)[7] == 15
    )
    elapsed = time.perf_counter() - start
    ok = not bad and pinned and elapsed < 1
    record("5 oracle equivalence", ok, f"mismatched l={bad} pinned={pinned} time={elapsed:.2f}s (<1s)")
    assert ok


def test_criterion_6_support_and_admissibility(record):
    start = time.perf_counter()
    bad = []
    for p in (5, 7, 11, 13):
        full = set(range(p))
        pairs = [
            ("b2-even-j", full - support_classes("f_neg", p)),
            ("b4-even-j", full - support_classes("psi", p)),
            ("b13-even-j", full - support_classes("psi", p)),
            ("sellers-parity", full - support_classes("f_neg", p) - {0}),
        ]
        bad += [(cid, p) for cid, expected in pairs if set(admissible_j(cid, p)) != expected]
    for p in primes_upto(97):
        if p >= 3 and not disjointness_check("psi", p):
            bad.append(("psi-disjoint", p))
        if p >= 5 and not disjointness_check("f_neg", p):
            bad.append(("f-disjoint", p))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1
    record("6 support/admissibility", ok, f"mismatches={bad} time={elapsed:.3f}s (<1s)")
    assert ok


def test_criterion_7_coverage_and_uniqueness(record):
    start = time.perf_counter()
    bad = []
    for p in qualifying_primes("b5", 50):
        if not kmj_cover_check(p):
            bad.append(("kmj", p))
        if not uniqueness_check("b5", p):
            bad.append(("unique-b5", p))
    for form in ("b8", "b16"):
        for p in qualifying_primes(form, 50):
            if not representable_check(form, p):
                bad.append((f"rep-{form}", p))
            if not uniqueness_check(form, p):
                bad.append((f"unique-{form}", p))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1
    record("7 coverage/uniqueness", ok, f"failures={bad} time={elapsed:.3f}s (<1s)")
    assert ok


def test_criterion_8_bp_prime_relation(record):
    start = time.perf_counter()
    bad = [p for p in (5, 7, 11, 13) if not check_bp_prime_relation(p, 1000).matched]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 5
    record("8 b'_p relation", ok, f"failures={bad} time={elapsed:.2f}s (<5s)")
    assert ok


def test_criterion_9_discovery(record):
    cases = [
        (PartitionFunction.regular(5), 2, 20, {(20, 5), (20, 13)}),
        (PartitionFunction.regular(13), 3, 9, {(9, 7)}),
        (PartitionFunction.unrestricted(), 5, 5, {(5, 4)}),
    ]
    missing = []
    contradicted = []
    for fn, m, a_max, expected in cases:
        found = search_congruences(SearchConfig(fn, m, a_max, n_count=500))
        pairs = {(r.claim.A, r.claim.B) for r in found}
        missing += [(str(fn), e) for e in expected - pairs]
        for r in found:
            for n in range(500):
                arg = r.claim.argument(n)
                if arg > 60:
                    break
                if enumerate_value(fn, arg) % m:
                    contradicted.append(r.claim.describe())
    ok = not missing and not contradicted
    record("9 discovery mode", ok, f"missing={missing} oracle contradictions={contradicted}")
    assert ok


PINNED = [
    ("b2-multiprime-i", dict(primes=(7, 5)), [(1225, 296), (1225, 541), (1225, 786), (1225, 1031)]),
    ("b2-multiprime-j", dict(primes=(7, 5)), [(245, 149), (245, 198)]),
    ("b5-even-i", dict(p=17, alpha=1, index=3), [(1156, 541)]),
]


def test_pinned_progressions(record):
    bad = []
    checked = 0
    for cid, kw, expected in PINNED:
        claims = family_claims(FamilyParams(cid, **kw))
        if [(c.A, c.B) for c in claims] != expected:
            bad.append((cid, "instances"))
        for r in verify_claims(claims, 50):
            checked += 1
            if not r.verified or r.n_checked != 50:
                bad.append(r.claim.describe())
    ok = not bad
    record("pinned example progressions", ok, f"{checked} progressions to n_count=50, failures={bad}")
    assert ok
