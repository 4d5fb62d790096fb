"""Acceptance criteria 1-18, one test each, all at exact rational equality.

Each test drives the matching theorem-suite item and, where an independent
oracle exists, cross-checks against it.  A one-line verdict per criterion is
printed in the terminal summary (see conftest.py).
"""

import time
from fractions import Fraction

import pytest

from fixnum import families as F
from fixnum.verify import FAIL, MISMATCH, PASS, SUITES, fixf
from oracles import nx_automorphisms, oracle_fixf


def checks_of(suite):
    return list(SUITES[suite]())


def assert_no_failures(checks):
    failed = [f"{c.label}: {c.detail}" for c in checks if c.status == FAIL]
    assert not failed, "\n".join(failed)
    assert checks


def test_criterion_01_cycles():
    checks = checks_of("cycles")
    assert len(checks) == 10
    assert_no_failures(checks)
    for n in (4, 6, 8, 10, 12):
        assert fixf(F.cycle(n)) == Fraction(n, n - 2)
    for n in (3, 5, 7, 9, 11):
        assert fixf(F.cycle(n)) == Fraction(n, n - 1)


def test_criterion_02_twin_characterization():
    checks = checks_of("twins")
    assert len(checks) == 120
    assert_no_failures(checks)


def test_criterion_03_example_families():
    assert_no_failures(checks_of("examples"))
    assert fixf(F.complete_multipartite(2, 2, 3)) == Fraction(7, 2)
    assert fixf(F.complete_minus_perfect_matching(6)) == 3


def test_criterion_04_joins():
    checks = checks_of("joins")
    assert len(checks) == 4
    assert_no_failures(checks)


def test_criterion_05_embedding():
    assert_no_failures(checks_of("embedding"))


def test_criterion_06_vertex_transitive():
    checks = checks_of("vertex-transitive")
    assert len(checks) == 5
    assert_no_failures(checks)


def test_criterion_07_hamming_johnson():
    start = time.perf_counter()
    checks = checks_of("hamming-johnson")
    assert time.perf_counter() - start < 300
    assert_no_failures(checks)
    assert fixf(F.johnson(8, 4)) == Fraction(35, 17)


def test_criterion_08_distance_transitive():
    assert_no_failures(checks_of("distance-transitive"))


def test_criterion_09_friendship():
    assert_no_failures(checks_of("friendship"))


def test_criterion_10_fans():
    assert_no_failures(checks_of("fans"))
    assert fixf(F.fan(3)) == 2
    assert all(fixf(F.fan(n)) == 1 for n in range(4, 9))


def test_criterion_11_trees():
    checks = checks_of("trees")
    assert sum(1 for c in checks if c.label.startswith("random tree")) == 50
    assert_no_failures(checks)


def test_criterion_12_comparison():
    assert_no_failures(checks_of("comparison"))


def test_criterion_13_corona():
    assert_no_failures(checks_of("corona"))
    # the K1 o H values come from the independent HiGHS oracle before the formula
    K1 = F.complete(1)
    for H, want in ((F.path(3), 2), (F.star(2), 2), (F.paw(), 2)):
        assert oracle_fixf(F.corona(K1, H)) == want == fixf(F.corona(K1, H))


def test_criterion_14_composition():
    assert_no_failures(checks_of("composition"))


def test_criterion_15_fixed_graph():
    assert_no_failures(checks_of("fixed-graph"))


def test_criterion_16_gadget():
    checks = checks_of("gadget")
    assert len(checks) == 4
    assert_no_failures(checks)


def test_criterion_17_oracle_equivalence():
    checks = checks_of("oracle")
    assert len(checks) == 150
    assert_no_failures(checks)
    from fixnum.autgroup import automorphisms
    from fixnum.verify import oracle_corpus
    for G in oracle_corpus()[::10]:
        assert sorted(automorphisms(G).elements()) == nx_automorphisms(G)


def test_criterion_18_wheels():
    checks = checks_of("wheels")
    assert len(checks) == 6
    assert all(c.status in (PASS, MISMATCH) for c in checks), [c.detail for c in checks]
    for c in checks:
        assert "printed formula" in c.detail


@pytest.mark.slow
def test_verify_all_within_budget():
    from fixnum.verify import run
    start = time.perf_counter()
    run("all")
    assert time.perf_counter() - start < 600
