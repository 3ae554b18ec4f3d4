"""Closed-form entry sums checked against direct summation."""

from fractions import Fraction

import pytest

from g2tok.core.errors import DegenerateSumError, UnboundedError
from g2tok.core.poly import ONE_MINUS_T, T, T_ONE, T_ZERO, TPoly
from g2tok.core.rational import RF_ONE, RationalFn, rf_sum
from g2tok.symbolic.forms import form, parity, reduce_conditions, var
from g2tok.symbolic.sums import plain_sum, sum_ceil_entry, sum_entry, weighted_sum
from g2tok.symbolic.terms import SymSum, SymTerm

WINDOWS = [(lo, hi) for lo in range(13) for hi in range(lo, 13)]
ODD = (1, -1, 3, -3)
RATIOS = [(c1, c2) for c1 in ODD for c2 in ODD]


def _h(u: int, lower: int, upper: int, circled: bool = True) -> TPoly:
    at_lower = circled and u == lower
    if at_lower and u == upper:
        return T_ZERO
    if at_lower:
        return T_ONE
    if u == upper:
        return -T
    return ONE_MINUS_T


def _brute(ratio, lower, upper, keep=lambda u: True, weight=None) -> RationalFn:
    weight = weight or (lambda u: _h(u, lower, upper))
    i, j = ratio
    return rf_sum(
        RationalFn.monomial(i * u, j * u, weight(u)) for u in range(lower, upper + 1) if keep(u)
    )


def _summand(ratio, gate=None) -> SymSum:
    i, j = ratio
    conds = reduce_conditions([gate]) if gate is not None else frozenset()
    return SymSum([SymTerm(RF_ONE, form(f=i), form(f=j), conds)])


@pytest.mark.parametrize("ratio", RATIOS)
def test_sum_entry_matches_direct_sum(ratio):
    s = sum_entry(_summand(ratio), "f", var("a"), var("b"))
    assert s.free_variables() <= {"a", "b"}
    for lower, upper in WINDOWS:
        assert s.evaluate({"a": lower, "b": upper}) == _brute(ratio, lower, upper)


@pytest.mark.parametrize("ratio", RATIOS)
def test_parity_gated_sum(ratio):
    gate = parity(form(f=1, c=1))
    s = sum_entry(_summand(ratio, gate), "f", var("a"), var("b"))
    for lower, upper in WINDOWS:
        for bit in (0, 1):
            expected = _brute(ratio, lower, upper, keep=lambda u, b=bit: (u + b) % 2 == 0)
            assert s.evaluate({"a": lower, "b": upper, "c": bit}) == expected


@pytest.mark.parametrize("c1,c2", RATIOS)
def test_half_integer_exponent_sum(c1, c2):
    # sum h(u) y^u x^((c1 + c2 u)/2) over the u with c1 + c2 u even
    gate = reduce_conditions([parity(form(c1, f=c2))])
    xexp = form(Fraction(c1, 2), f=Fraction(c2, 2))
    s = sum_entry(SymSum([SymTerm(RF_ONE, xexp, form(f=1), gate)]), "f", var("a"), var("b"))
    for lower, upper in WINDOWS:
        expected = rf_sum(
            RationalFn.monomial((c1 + c2 * u) // 2, u, _h(u, lower, upper))
            for u in range(lower, upper + 1)
            if (c1 + c2 * u) % 2 == 0
        )
        assert s.evaluate({"a": lower, "b": upper}) == expected


@pytest.mark.parametrize("ratio", [(1, 0), (0, 1), (-1, 3)])
def test_ceiling_sum(ratio):
    i, j = ratio
    summand = SymSum([SymTerm(RF_ONE, form(b=i), form(b=j))])
    s = sum_ceil_entry(summand, "b", var("c"), var("a"))
    for c in range(0, 25):
        lower = (c + 1) // 2
        for upper in range(lower, 13):
            expected = _brute(
                (i, j), lower, upper, weight=lambda u, c=c, up=upper: _h(u, lower, up, 2 * u == c)
            )
            assert s.evaluate({"c": c, "a": upper}) == expected


def test_plain_sum():
    s = plain_sum(_summand((2, 1)), "f", var("a"), var("b"))
    for lower, upper in WINDOWS:
        expected = _brute((2, 1), lower, upper, weight=lambda u: T_ONE)
        assert s.evaluate({"a": lower, "b": upper}) == expected


def test_weighted_sum_with_an_interior_point():
    interior, low, high, mid = ONE_MINUS_T, T, -T, T * T
    s = weighted_sum(
        _summand((1, 2)),
        "f",
        var("a"),
        var("b"),
        interior=interior,
        at_lower=low,
        at_upper=high,
        points=[(form(1, a=1), mid)],
    )

    for lower in range(0, 4):
        for upper in range(lower + 2, lower + 7):

            def weight(u, lo=lower, up=upper):
                if u == lo:
                    return low
                if u == up:
                    return high
                return mid if u == lo + 1 else interior

            assert s.evaluate({"a": lower, "b": upper}) == _brute(
                (1, 2), lower, upper, weight=weight
            )


def test_missing_bound():
    with pytest.raises(UnboundedError):
        sum_entry(_summand((1, 0)), "f", None, var("a"))


def test_degenerate_ratio():
    constant = SymSum([SymTerm(RF_ONE, form(a=1), form())])
    with pytest.raises(DegenerateSumError):
        sum_entry(constant, "f", form(), var("b"))
