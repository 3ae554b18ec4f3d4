"""Closed-form summation over one pattern entry.

With h(u) = 1 at the lower bound L (circled), -t at the upper bound U (boxed)
and 1 - t in between, h(u) = (1 - t) + t[u = L] - [u = U] for every L <= U, so

    sum_{L <= u <= U} h(u) X^u = (1 - tX)/(1 - X) * (X^L - X^U).

A term gated by 1_0(g + u) only sees every other u; the same decomposition over
the ratio R = X^2 yields four boundary terms at L, L + 1, U and U + 1, each
carrying the parity gate its own exponent inherits.
"""

from collections.abc import Callable, Iterable

from g2tok.core.errors import DegenerateSumError, NonAffineError, UnboundedError
from g2tok.core.poly import ONE_MINUS_T, LaurentPoly, TPoly
from g2tok.core.rational import BinomialFactor, RationalFn
from g2tok.symbolic.forms import AffineForm, parity
from g2tok.symbolic.terms import SymSum, SymTerm, half


def _require(lower: AffineForm | None, upper: AffineForm | None, var: str) -> None:
    if lower is None or upper is None:
        raise UnboundedError(f"sum over {var} needs both bounds")


def _ratio(term: SymTerm, var: str, scale: int = 1) -> tuple[int, int]:
    """Exponent pair of X^scale, X the monomial multiplied in per unit step of var."""
    ax, ay = term.xexp.coeff(var) * scale, term.yexp.coeff(var) * scale
    if ax.denominator != 1 or ay.denominator != 1:
        raise NonAffineError(f"exponent of {var} is not integral in {term}")
    if not ax and not ay:
        raise DegenerateSumError(f"geometric ratio is 1 when summing over {var}")
    return int(ax), int(ay)


def geometric_factor(i: int, j: int) -> RationalFn:
    """(1 - t X)/(1 - X) with X = x^i y^j."""
    return RationalFn(
        BinomialFactor(i, j, -1, deformed=True).poly(), [BinomialFactor(i, j)], reduce=False
    )


def step_factor(i: int, j: int) -> RationalFn:
    """(1 - t)/(1 - X) with X = x^i y^j."""
    return RationalFn(
        LaurentPoly.monomial(0, 0, ONE_MINUS_T), [BinomialFactor(i, j)], reduce=False
    )


def plain_factor(i: int, j: int) -> RationalFn:
    """1/(1 - X) with X = x^i y^j."""
    return RationalFn(1, [BinomialFactor(i, j)], reduce=False)


def _scaled_at(
    term: SymTerm | None, var: str, value: AffineForm, factor: RationalFn
) -> SymTerm | None:
    if term is None:
        return None
    moved = term.at(var, value)
    return moved.scaled(factor) if moved is not None else None


def _map_terms(s: SymSum, fn: Callable[[SymTerm], Iterable[SymTerm | None]]) -> SymSum:
    return SymSum((out for term in s for out in fn(term)), merge=s.merge)


def sum_entry(s: SymSum, var: str, lower: AffineForm, upper: AffineForm) -> SymSum:
    """Sum over lower <= var <= upper with circled/boxed endpoint weights."""
    _require(lower, upper, var)

    def one(term: SymTerm) -> list[SymTerm | None]:
        if term.condition_on(var) is None:
            g = geometric_factor(*_ratio(term, var))
            return [_scaled_at(term, var, lower, g), _scaled_at(term, var, upper, -g)]
        r = _ratio(term, var, scale=2)
        g, k = geometric_factor(*r), step_factor(*r)
        return [
            _scaled_at(term, var, lower, g),
            _scaled_at(term, var, lower + 1, k),
            _scaled_at(term, var, upper, -g),
            _scaled_at(term, var, upper + 1, -k),
        ]

    return _map_terms(s, one)


def sum_ceil_entry(s: SymSum, var: str, twice_lower: AffineForm, upper: AffineForm) -> SymSum:
    """Sum over ceil(twice_lower / 2) <= var <= upper; circled only when 2 var = twice_lower."""
    _require(twice_lower, upper, var)
    even, odd = parity(twice_lower), parity(twice_lower + 1)

    def one(term: SymTerm) -> list[SymTerm | None]:
        if term.condition_on(var) is not None:
            raise NonAffineError(f"{var} carries a parity gate before its ceiling sum")
        ratio = _ratio(term, var)
        g, k = geometric_factor(*ratio), step_factor(*ratio)
        at_half = term.with_condition(even)
        at_next = term.with_condition(odd)
        return [
            _scaled_at(at_half, var, half(twice_lower), g),
            _scaled_at(at_next, var, half(twice_lower + 1), k),
            _scaled_at(term, var, upper, -g),
        ]

    return _map_terms(s, one)


def sum_b_entry(s: SymSum, upper: AffineForm) -> SymSum:
    """The b sum: ceil(c/2) <= b <= upper."""
    return sum_ceil_entry(s, "b", AffineForm(coeffs=(("c", 1),)), upper)


def plain_sum(s: SymSum, var: str, lower: AffineForm, upper: AffineForm) -> SymSum:
    """Unweighted sum over lower <= var <= upper: (F(L) - F(U + 1))/(1 - X)."""
    _require(lower, upper, var)

    def one(term: SymTerm) -> list[SymTerm | None]:
        if term.condition_on(var) is not None:
            raise NonAffineError(f"plain sum over {var} with a parity gate")
        p = plain_factor(*_ratio(term, var))
        return [_scaled_at(term, var, lower, p), _scaled_at(term, var, upper + 1, -p)]

    return _map_terms(s, one)


def weighted_sum(
    s: SymSum,
    var: str,
    lower: AffineForm,
    upper: AffineForm,
    interior: TPoly,
    at_lower: TPoly,
    at_upper: TPoly,
    points: Iterable[tuple[AffineForm, TPoly]] = (),
) -> SymSum:
    """sum_u w(u) F(u) where w is `interior` except at the bounds and at the listed points.

    The listed points must lie strictly between the bounds for every admissible value
    of the outer variables.
    """
    out = plain_sum(s, var, lower, upper).scaled(interior) if interior else SymSum(merge=s.merge)
    for point, w in [(lower, at_lower), (upper, at_upper), *points]:
        if w != interior:
            out = out + s.substitute(var, point).scaled(w - interior)
    return out
