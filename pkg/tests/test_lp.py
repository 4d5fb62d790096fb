from fractions import Fraction

import pytest

from fixnum import families as F
from fixnum.errors import GraphError
from fixnum.graph import from_edge_list
from fixnum.lp import (
    CoverLp,
    fixing_lp,
    fmt_rational,
    fractional_fixing_number,
    fractional_metric_dimension,
    integral_cover_optimum,
    parse_rational,
    solve_cover_lp,
    solve_permuted,
)
from oracles import cover_lp_value, oracle_dimf, oracle_fixf


def test_rational_formatting():
    assert fmt_rational(Fraction(6, 4)) == "3/2"
    assert fmt_rational(Fraction(4, 2)) == "2"
    assert parse_rational("35/17") == Fraction(35, 17)
    assert parse_rational("0") == 0


def test_triangle_cover():
    lp = CoverLp.from_sets([{0, 1}, {1, 2}, {0, 2}], 3)
    res = solve_cover_lp(lp)
    assert res.value == Fraction(3, 2)
    assert res.weights == (Fraction(1, 2),) * 3
    assert sum(res.dual) == res.value


def test_empty_lp_is_zero():
    assert solve_cover_lp(CoverLp(4, ())).value == 0


def test_uncoverable_row_rejected():
    with pytest.raises((GraphError, ValueError)):
        solve_cover_lp(CoverLp.from_matrix([[0, 0, 0]]))


def test_matrix_round_trip():
    M = [[1, 0, 1], [0, 1, 1]]
    assert CoverLp.from_matrix(M).matrix() == M


def test_to_dict_strings():
    d = fractional_fixing_number(F.cycle(6)).to_dict()
    assert d["value"] == "3/2"
    assert all(isinstance(w, str) for w in d["weights"])


@pytest.mark.parametrize("seed", range(8))
def test_random_lp_against_highs(seed):
    import random
    rng = random.Random(seed)
    n = 7
    rows = []
    for _ in range(12):
        row = [1 if rng.random() < 0.4 else 0 for _ in range(n)]
        if not any(row):
            row[rng.randrange(n)] = 1
        rows.append(row)
    lp = CoverLp.from_matrix(rows)
    assert solve_cover_lp(lp).value == cover_lp_value(rows, n)
    assert solve_cover_lp(lp, reduce=False).value == solve_cover_lp(lp).value
    assert solve_permuted(lp, seed).value == solve_cover_lp(lp).value


def test_integral_optimum():
    lp = CoverLp.from_sets([{0, 1}, {1, 2}, {0, 2}], 3)
    value, cols = integral_cover_optimum(lp)
    assert value == 2 and len(cols) == 2


# frozen from the HiGHS oracle in tests/oracles.py (exact dual certificate)
DERIVED_FIXF = {
    "W5": Fraction(2), "W6": Fraction(5, 4), "W7": Fraction(3, 2), "W8": Fraction(7, 6),
    "W9": Fraction(4, 3), "W10": Fraction(9, 8), "Cgadget2": Fraction(1), "paw": Fraction(1),
}


@pytest.mark.parametrize("name", sorted(DERIVED_FIXF))
def test_frozen_derived_values(name):
    G = F.wheel(int(name[1:])) if name.startswith("W") else (F.c_gadget(2) if name == "Cgadget2" else F.paw())
    assert fractional_fixing_number(G).value == DERIVED_FIXF[name]


@pytest.mark.parametrize("G", [F.wheel(7), F.grid(2, 3), F.spider(1, 3), F.friendship(2), F.paw(), F.c_gadget(2)],
                         ids=lambda g: g.name)
def test_against_independent_oracles(G):
    assert fractional_fixing_number(G).value == oracle_fixf(G)
    assert fractional_metric_dimension(G).value == oracle_dimf(G)


def test_dimf_rejects_disconnected():
    with pytest.raises(GraphError):
        fractional_metric_dimension(from_edge_list(3, [(0, 1)]))


def test_weights_are_feasible():
    G = F.johnson(5, 2)
    res = fractional_fixing_number(G)
    lp = fixing_lp(G)
    for r in lp.rows:
        assert sum(res.weights[j] for j in range(G.n) if (r >> j) & 1) >= 1
    assert all(0 <= w <= 1 for w in res.weights)
