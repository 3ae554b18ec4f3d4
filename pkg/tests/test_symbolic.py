"""The symbolic pattern sums and the multi-degree tables built from them."""

import random
from fractions import Fraction

import pytest

from g2tok.core.errors import UnresolvedParity
from g2tok.core.multidegree import T1_fn, T_fn, degree
from g2tok.core.rational import eval_at
from g2tok.g2.identity import lhs_parts, weyl_table
from g2tok.g2.roots import WeightParams
from g2tok.symbolic.engine import adj_symbolic, std_symbolic
from g2tok.symbolic.forms import form
from g2tok.symbolic.printed import PRINTED_ADJ, PRINTED_STD, PRINTED_WEYL, Part
from g2tok.symbolic.tables import (
    PARITIES,
    adj_table,
    collect,
    final_table,
    identify,
    is_plus_minus_T,
    std_table,
    table_model,
)
from g2tok.symbolic.terms import SymSum

POINT = (Fraction(1, 3), Fraction(2, 7), Fraction(5, 11))
PAIRS = [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2), (3, 3), (4, 1)]
_rng = random.Random(8)
RANDOM_PAIRS = [(_rng.randint(1, 8), _rng.randint(1, 8)) for _ in range(10)]


def _value(s: SymSum, l1: int, l2: int) -> Fraction:
    assignment = {"l1": l1, "l2": l2}
    total = Fraction(0)
    for term in s:
        coeff = term.evaluate(assignment)
        if coeff is not None:
            total += eval_at(coeff, *POINT)
    return total


def test_only_l1_l2_remain_free():
    assert std_symbolic().free_variables() <= {"l1", "l2"}
    assert adj_symbolic().free_variables() <= {"l1", "l2"}


@pytest.mark.parametrize("l1,l2", PAIRS)
def test_standard_sum_matches_enumeration(l1, l2):
    parts = lhs_parts(WeightParams(l1, l2))
    assert _value(std_symbolic(), l1, l2) == parts.std.evaluate(*POINT)


@pytest.mark.parametrize("l1,l2", PAIRS)
def test_adjusted_sum_matches_enumeration(l1, l2):
    parts = lhs_parts(WeightParams(l1, l2))
    assert _value(adj_symbolic(), l1, l2) == parts.adj.evaluate(*POINT)


@pytest.mark.parametrize("l1,l2", RANDOM_PAIRS)
def test_symbolic_sums_equal_enumeration_exactly(l1, l2):
    parts = lhs_parts(WeightParams(l1, l2), threads=2)
    assignment = {"l1": l1, "l2": l2}
    assert std_symbolic().evaluate(assignment) == parts.std
    assert adj_symbolic().evaluate(assignment) == parts.adj


def test_unmerged_sums_keep_the_raw_degrees():
    assert len(std_symbolic(merge=False).raw_degrees()) == 33
    assert len(adj_symbolic(merge=False).raw_degrees()) == 14
    union = std_symbolic(merge=False).raw_degrees() | adj_symbolic(merge=False).raw_degrees()
    assert len(union) == 35
    assert len(std_symbolic(merge=False)) >= len(std_symbolic())


def test_nonzero_degree_counts():
    for eps in PARITIES:
        assert len(std_table(*eps)) == 18
        assert len(adj_table(*eps)) == 10
        assert len(final_table(*eps)) == 12


def test_tables_do_not_depend_on_parity():
    for build in (std_table, adj_table, final_table):
        base = build(0, 0)
        for eps in PARITIES[1:]:
            assert build(*eps).same_as(base)


def test_final_table_is_the_weyl_side():
    weyl = weyl_table()
    final = final_table()
    assert final.same_as(weyl)
    assert all(is_plus_minus_T(c) for _, c in final.items())
    assert final.support() == {row.degree for row in PRINTED_WEYL}


def test_printed_supports():
    assert std_table().support() == {row.degree for row in PRINTED_STD}
    assert adj_table().support() == {row.degree for row in PRINTED_ADJ}


def test_collect_rejects_free_entries():
    with pytest.raises(UnresolvedParity):
        collect(SymSum.monomial(form(a=1), form()), 0, 0)


def test_identify():
    t = T_fn()
    assert identify(t) == "T(x)"
    assert identify(-t) == "-T(x)"
    assert identify(t * 0) == "0"
    value = Part(1, "T", 0).value() + Part(-1, "T1", 2).value()
    assert identify(value) == "T(x) - q^-1 x^2y T1(x)"
    assert identify(T1_fn() * 5) is None


def test_table_model_rows():
    model = table_model("Weyl side", weyl_table())
    assert len(model.rows) == 12
    assert model.parity is None
    row = next(r for r in model.rows if (r.m1, r.n1, r.m2, r.n2) == ("4", "2", "6", "4"))
    assert row.identified == "T(x)"

