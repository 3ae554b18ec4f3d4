"""Tests for factored rational functions and the reference coefficients."""

import random
from fractions import Fraction

import pytest
import sympy

from g2tok.core.errors import PoleError
from g2tok.core.multidegree import (
    T1_fn,
    T2_fn,
    T3_fn,
    T_fn,
    MultiDegreeTable,
    degree,
    format_degree,
)
from g2tok.core.poly import ONE_MINUS_T, LaurentPoly, T, TPoly
from g2tok.core.rational import (
    RF_ONE,
    RF_ZERO,
    BinomialFactor,
    RationalFn,
    eval_at,
    format_rational,
    rf_add,
    rf_eq,
    rf_mul,
    rf_sum,
)

X = LaurentPoly.monomial(1, 0)
Y = LaurentPoly.monomial(0, 1)
ONE_MINUS_X = BinomialFactor(1, 0)
FACTORS = (
    ONE_MINUS_X,
    BinomialFactor(0, 1),
    BinomialFactor(1, 1),
    BinomialFactor(2, 1),
    BinomialFactor(4, 2),
    BinomialFactor(1, 0, deformed=True),
)
POINTS = (
    (Fraction(1, 3), Fraction(2, 7), Fraction(5, 11)),
    (Fraction(-2, 5), Fraction(3, 4), Fraction(2)),
)
SEEDS = range(20)
SX, SY, ST = sympy.symbols("x y t")


def _random_fn(rng: random.Random) -> RationalFn:
    num = LaurentPoly(
        {
            (rng.randint(-1, 3), rng.randint(-1, 3)): TPoly(
                rng.randint(-3, 3) for _ in range(rng.randint(1, 3))
            )
            for _ in range(rng.randint(1, 4))
        }
    )
    return RationalFn(num, rng.choices(FACTORS, k=rng.randint(0, 3)))


def _sym(p: RationalFn | LaurentPoly):
    if isinstance(p, RationalFn):
        den = sympy.Integer(1)
        for f in p.den:
            den *= _sym(f.poly())
        return _sym(p.num) / den
    return sympy.Add(
        *(
            c * ST**k * SX**i * SY**j
            for (i, j), tp in p.terms.items()
            for k, c in enumerate(tp.coeffs)
        )
    )


def test_binomial_factor_validation():
    with pytest.raises(ValueError):
        BinomialFactor(0, 0)
    with pytest.raises(ValueError):
        BinomialFactor(1, 0, sign=2)


def test_negative_monomial_factor_is_reoriented():
    r = RationalFn(1, [BinomialFactor(-1, 0)])
    assert r.den == (ONE_MINUS_X,)
    assert r == RationalFn(LaurentPoly.monomial(1, 0, -1), [ONE_MINUS_X])


def test_cancellation_by_exact_division():
    r = RationalFn((1 - X) * (1 - X), [ONE_MINUS_X])
    assert r.den == ()
    assert r == 1 - X


def test_geometric_series_identity():
    # 1 + x + x^2 == (1 - x^3)/(1 - x)
    r = RationalFn(1 - X * X * X, [ONE_MINUS_X])
    assert r == 1 + X + X * X


def test_sum_over_common_denominator():
    a = RationalFn(1, [ONE_MINUS_X])
    b = RationalFn(-1, [ONE_MINUS_X])
    assert rf_sum([a, b]).is_zero()
    assert rf_sum([]) == RF_ZERO
    half = RationalFn(X, [ONE_MINUS_X])
    assert a - half == RF_ONE


def test_multiplication_with_t_and_ints():
    r = RationalFn(1, [ONE_MINUS_X]) * ONE_MINUS_T
    assert r * 2 == RationalFn(LaurentPoly.monomial(0, 0, ONE_MINUS_T * 2), [ONE_MINUS_X])
    assert r * RationalFn(1 - X) == LaurentPoly.monomial(0, 0, ONE_MINUS_T)


def test_evaluation_and_poles():
    r = RationalFn(1, [ONE_MINUS_X])
    assert eval_at(r, Fraction(1, 2), 3, 0) == 2
    with pytest.raises(PoleError):
        eval_at(r, 1, 3, 0)
    with pytest.raises(PoleError):
        eval_at(RationalFn.monomial(-1, 0), 0, 1, 0)


def test_deformed_factor():
    f = BinomialFactor(1, 1, deformed=True)
    assert f.poly() == 1 - LaurentPoly.monomial(1, 1, T)
    assert f.evaluate(2, 3, Fraction(1, 2)) == -2


def test_format_rational():
    assert format_rational(RationalFn(1, [ONE_MINUS_X])) == "(1)/((1 - x))"
    assert format_rational(RF_ZERO) == "0"


def test_reference_coefficients_are_distinct():
    fns = [T_fn(), T1_fn(), T2_fn(), T3_fn()]
    for i, a in enumerate(fns):
        for b in fns[i + 1 :]:
            assert a != b
    assert T_fn() != -T_fn()


def test_T_specializations():
    x0, y0 = Fraction(1, 3), Fraction(1, 5)
    assert eval_at(T_fn(), x0, y0, 1) == 1
    expected = Fraction(1)
    for i, j in ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)):
        expected /= 1 - x0**i * y0**j
    assert eval_at(T_fn(), x0, y0, 0) == expected


class TestMultiDegreeTable:
    def test_from_pairs_sums_and_drops_zeros(self):
        d1, d2 = degree(1, 0, 0, 0), degree(0, 1, 0, 0)
        t = T_fn()
        table = MultiDegreeTable.from_pairs([(d1, t), (d1, -t), (d2, t)])
        assert len(table) == 1
        assert d1 not in table
        assert table[d1].is_zero()
        assert table[d2] == t

    def test_addition_and_comparison(self):
        d = degree(2, 1, 3, 2)
        a = MultiDegreeTable({d: T_fn()})
        b = MultiDegreeTable({d: -T_fn()})
        assert len(a + b) == 0
        assert a.same_as(MultiDegreeTable({d: T_fn()}))
        assert not a.same_as(b)

    def test_degree_format(self):
        assert format_degree(degree(Fraction(1, 2), 0, 3, -1)) == "((1/2,0),(3,-1))"


@pytest.mark.parametrize("seed", SEEDS)
def test_evaluation_is_a_ring_homomorphism(seed):
    rng = random.Random(seed)
    a, b = _random_fn(rng), _random_fn(rng)
    for pt in POINTS:
        assert eval_at(rf_add(a, b), *pt) == eval_at(a, *pt) + eval_at(b, *pt)
        assert eval_at(rf_mul(a, b), *pt) == eval_at(a, *pt) * eval_at(b, *pt)
        assert eval_at(-a, *pt) == -eval_at(a, *pt)


@pytest.mark.parametrize("seed", SEEDS)
def test_rf_eq_is_an_equivalence(seed):
    rng = random.Random(seed)
    a = _random_fn(rng)
    f, g = rng.choice(FACTORS), rng.choice(FACTORS)
    b = RationalFn(a.num * f.poly(), (*a.den, f), reduce=False)
    c = RationalFn(b.num * g.poly(), (*b.den, g), reduce=False)
    assert rf_eq(a, a)
    assert rf_eq(a, b) and rf_eq(b, a)
    assert rf_eq(b, c) and rf_eq(a, c)
    assert not rf_eq(a, a + RF_ONE)


def test_product_with_a_denominator_factor_cancels_it():
    factor = BinomialFactor(4, 2)
    assert factor in T1_fn().den
    product = rf_mul(T1_fn(), RationalFn(1 - X**4 * Y**2))
    assert factor not in product.den
    x0, y0, _ = POINTS[0]
    assert eval_at(product, *POINTS[0]) == eval_at(T1_fn(), *POINTS[0]) * (1 - x0**4 * y0**2)


@pytest.mark.parametrize("seed", SEEDS)
def test_arithmetic_agrees_with_sympy(seed):
    rng = random.Random(seed)
    a, b = _random_fn(rng), _random_fn(rng)
    assert sympy.cancel(_sym(rf_add(a, b)) - _sym(a) - _sym(b)) == 0
    assert sympy.cancel(_sym(rf_mul(a, b)) - _sym(a) * _sym(b)) == 0
