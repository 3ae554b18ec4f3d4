"""Both sides of the G2 Tokuyama-type identity as exact Laurent polynomials.

    sum_{pi in B(theta+rho)} H_hat(pi) x^(a+c+e) y^(b+d+f)
        = x^(-w_l(theta+rho)) D(x) sum_w sgn(w) x^(w(theta+rho)) / prod_{alpha>0}(1 - x^alpha)
"""

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

from g2tok.core.config import get_spot_points
from g2tok.core.multidegree import MultiDegreeTable, T_fn, degree
from g2tok.core.poly import ONE, LaurentPoly, TPoly, poly_div_exact, poly_mul
from g2tok.core.rational import BinomialFactor, eval_at
from g2tok.g2.patterns import decorations, iter_patterns
from g2tok.g2.roots import (
    VARPI1,
    VARPI2,
    WeightParams,
    generate_weyl_group,
    long_element,
    monomial_of,
    positive_roots,
    theta_plus_rho,
    weyl_dimension,
)
from g2tok.g2.weights import H_hat, H_std, adj_rule_for, h
from g2tok.schemas.report import (
    CellSummary,
    GridReport,
    Params,
    VerificationReport,
    terms_of,
)


@cache
def D_poly() -> LaurentPoly:
    """prod over positive roots of (1 - t x^alpha)."""
    out = ONE
    for r in positive_roots():
        out = poly_mul(out, BinomialFactor(*monomial_of(r), -1, deformed=True).poly())
    return out


@cache
def weyl_denominator() -> LaurentPoly:
    """prod over positive roots of (1 - x^alpha)."""
    out = ONE
    for r in positive_roots():
        out = poly_mul(out, BinomialFactor(*monomial_of(r)).poly())
    return out


@dataclass
class LhsParts:
    std: LaurentPoly
    adj: LaurentPoly
    pattern_count: int
    histogram: Counter = field(default_factory=Counter)

    @property
    def total(self) -> LaurentPoly:
        return self.std + self.adj


def _accumulate(acc: dict, key: tuple[int, int], coeff: TPoly) -> None:
    slot = acc.get(key)
    if slot is None:
        acc[key] = list(coeff.coeffs)
        return
    if len(slot) < len(coeff.coeffs):
        slot.extend([0] * (len(coeff.coeffs) - len(slot)))
    for i, v in enumerate(coeff.coeffs):
        slot[i] += v


def _lhs_chunk(l1: int, l2: int, e_values: tuple[int, ...]) -> tuple[dict, dict, int, Counter]:
    w = WeightParams(l1, l2)
    std: dict = {}
    adj: dict = {}
    count = 0
    histogram: Counter = Counter()
    for p in iter_patterns(w, e_values):
        count += 1
        dec = decorations(p, w)
        key = p.weight_monomial()
        hs = H_std(p, w, dec)
        if hs:
            _accumulate(std, key, hs)
        rule = adj_rule_for(p, w, dec)
        if rule is not None:
            histogram[rule.name] += 1
            ha = rule.payoff * h(dec.status("f"))
            if ha:
                _accumulate(adj, key, ha)
    return std, adj, count, histogram


def _merge(target: dict, part: dict) -> None:
    for key, coeffs in part.items():
        _accumulate(target, key, TPoly(coeffs))


def lhs_parts(w: WeightParams, threads: int = 1) -> LhsParts:
    """Pattern sum split into the standard and adjusted parts.

    With threads > 1 the outer index e is partitioned across worker processes;
    chunks merge in e order, so the result does not depend on the thread count.
    """
    if threads <= 1:
        std, adj, count, histogram = _lhs_chunk(w.l1, w.l2, tuple(range(w.l1 + 1)))
    else:
        chunks = [tuple(range(i, w.l1 + 1, threads)) for i in range(threads)]
        chunks = [c for c in chunks if c]
        std, adj, count, histogram = {}, {}, 0, Counter()
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            for s, a, n, hist in pool.map(_lhs_chunk, *zip(*[(w.l1, w.l2, c) for c in chunks])):
                _merge(std, s)
                _merge(adj, a)
                count += n
                histogram.update(hist)
    return LhsParts(
        std=LaurentPoly.from_coefficients(std),
        adj=LaurentPoly.from_coefficients(adj),
        pattern_count=count,
        histogram=histogram,
    )


def lhs_std(w: WeightParams) -> LaurentPoly:
    return lhs_parts(w).std


def lhs_adj(w: WeightParams) -> LaurentPoly:
    return lhs_parts(w).adj


def lhs_sum(w: WeightParams) -> LaurentPoly:
    return lhs_parts(w).total


def check_long_element() -> None:
    w_l = long_element()
    for v in (VARPI1, VARPI2):
        if w_l.apply(v) != -v:
            raise RuntimeError("the long element does not act as -1 on the weight lattice")


def alternating_sum(w: WeightParams) -> LaurentPoly:
    """x^(theta+rho) * sum_w sgn(w) x^(w(theta+rho))."""
    check_long_element()
    lam = theta_plus_rho(w)
    terms: dict[tuple[int, int], int] = {}
    for g in generate_weyl_group():
        key = monomial_of(lam + g.apply(lam))
        terms[key] = terms.get(key, 0) + g.sign
    return LaurentPoly(terms)


def rhs_formula(w: WeightParams) -> LaurentPoly:
    quotient = poly_div_exact(alternating_sum(w), weyl_denominator())
    return poly_mul(D_poly(), quotient)


Point = tuple[Fraction, Fraction, Fraction]
PatternTerm = tuple[int, int, TPoly]


def sample_points(w: WeightParams, count: int, q_value: Fraction | None = None) -> list[Point]:
    """Seeded random rational (x, y, t) off the zeros of prod(1 - x^alpha); t = 1/q if given."""
    rng = random.Random(1000 * w.l1 + w.l2)
    t_fixed = 1 / Fraction(q_value) if q_value else None
    points: list[Point] = []
    while len(points) < count:
        x0 = Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 7))
        y0 = Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 7))
        t0 = t_fixed if t_fixed is not None else Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        if eval_at(weyl_denominator(), x0, y0, t0):
            points.append((x0, y0, t0))
    return points


def pattern_terms(w: WeightParams) -> list[PatternTerm]:
    """(ex, ey, H_hat) for every pattern with a nonzero weight; nothing is combined."""
    out = []
    for p in iter_patterns(w):
        weight = H_hat(p, w)
        if weight:
            out.append((*p.weight_monomial(), weight))
    return out


def _scaled_powers(v: Fraction, top: int) -> list[int]:
    """num^k * den^(top - k) for k = 0..top."""
    return [v.numerator**k * v.denominator ** (top - k) for k in range(top + 1)]


def lhs_at(terms: list[PatternTerm], point: Point) -> Fraction:
    """The pattern sum at one point, accumulated in integers over a common denominator."""
    if not terms:
        return Fraction(0)
    x0, y0, t0 = point
    top_x = max(ex for ex, _, _ in terms)
    top_y = max(ey for _, ey, _ in terms)
    top_t = max(hp.degree for _, _, hp in terms)
    xs, ys, ts = _scaled_powers(x0, top_x), _scaled_powers(y0, top_y), _scaled_powers(t0, top_t)
    weights: dict[TPoly, int] = {}
    total = 0
    for ex, ey, hp in terms:
        hv = weights.get(hp)
        if hv is None:
            hv = weights[hp] = sum(c * ts[k] for k, c in enumerate(hp.coeffs))
        total += hv * xs[ex] * ys[ey]
    scale = x0.denominator**top_x * y0.denominator**top_y * t0.denominator**top_t
    return Fraction(total, scale)


def rhs_at(w: WeightParams, point: Point) -> Fraction:
    """D(x) times the Weyl quotient at one point, without dividing polynomials."""
    return (
        eval_at(D_poly(), *point)
        * eval_at(alternating_sum(w), *point)
        / eval_at(weyl_denominator(), *point)
    )


def spot_check(w: WeightParams, count: int, q_value: Fraction | None = None) -> bool:
    """Both sides evaluated exactly at `count` points; stops at the first disagreement."""
    if count <= 0:
        return True
    terms = pattern_terms(w)
    return all(lhs_at(terms, pt) == rhs_at(w, pt) for pt in sample_points(w, count, q_value))


def verify(
    w: WeightParams,
    threads: int = 1,
    q_value: Fraction | None = None,
    spot_points: int | None = None,
) -> VerificationReport:
    """Spot-check both sides at rational points, then expand and compare them exactly.

    A failed spot check already decides the cell; the polynomials are then not built.
    """
    spot_points = get_spot_points() if spot_points is None else spot_points
    if not spot_check(w, spot_points, q_value):
        return VerificationReport(
            params=Params(l1=w.l1, l2=w.l2),
            equal=False,
            pattern_count=weyl_dimension(w),
            spot_points=spot_points,
            spot_agree=False,
        )
    parts = lhs_parts(w, threads=threads)
    lhs = parts.total
    rhs = rhs_formula(w)
    diff = lhs - rhs
    return VerificationReport(
        params=Params(l1=w.l1, l2=w.l2),
        equal=diff.is_zero(),
        pattern_count=parts.pattern_count,
        lhs=terms_of(lhs),
        rhs=terms_of(rhs),
        diff=terms_of(diff),
        adj_rule_histogram=dict(sorted(parts.histogram.items())),
        spot_points=spot_points,
    )


def _grid_cell(l1: int, l2: int, q_value: Fraction | None = None) -> CellSummary:
    report = verify(WeightParams(l1, l2), q_value=q_value)
    return CellSummary(
        l1=l1,
        l2=l2,
        equal=report.equal,
        pattern_count=report.pattern_count,
        lhs_terms=len(report.lhs),
        spot_agree=report.spot_agree,
    )


def verify_grid(bound: int, threads: int = 1, q_value: Fraction | None = None) -> GridReport:
    """All cells 1 <= l1, l2 <= bound, merged in (l1, l2) order."""
    cells = [(l1, l2) for l1 in range(1, bound + 1) for l2 in range(1, bound + 1)]
    if threads <= 1:
        summaries = [_grid_cell(l1, l2, q_value) for l1, l2 in cells]
    else:
        l1s, l2s = zip(*cells)
        with ProcessPoolExecutor(max_workers=threads) as pool:
            summaries = list(pool.map(_grid_cell, l1s, l2s, [q_value] * len(cells)))
    return GridReport(bound=bound, cells=summaries)


def weyl_table() -> MultiDegreeTable:
    """Multi-degrees of the right side: varpi_i + w(varpi_i), coefficient sgn(w) T(x)."""
    t = T_fn()
    pairs = []
    for g in generate_weyl_group():
        u = VARPI1 + g.apply(VARPI1)
        v = VARPI2 + g.apply(VARPI2)
        pairs.append((degree(u.m1, u.m2, v.m1, v.m2), t * g.sign))
    return MultiDegreeTable.from_pairs(pairs)


__all__ = [
    "D_poly",
    "weyl_denominator",
    "LhsParts",
    "lhs_parts",
    "lhs_std",
    "lhs_adj",
    "lhs_sum",
    "alternating_sum",
    "rhs_formula",
    "sample_points",
    "pattern_terms",
    "lhs_at",
    "rhs_at",
    "spot_check",
    "verify",
    "verify_grid",
    "weyl_table",
]
