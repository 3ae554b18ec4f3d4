"""Rational functions whose denominators are products of binomials 1 ± (t)x^i y^j.

Denominators stay factored. Cancellation is trial exact division of the
numerator by each denominator factor; no multivariate GCD is attempted.
"""

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from g2tok.core.errors import NonDivisible, PoleError
from g2tok.core.poly import ONE, ZERO, LaurentPoly, T, TPoly, format_poly, poly_mul


@dataclass(frozen=True, order=True)
class BinomialFactor:
    """The factor 1 + sign * x**i * y**j, or 1 + sign * t * x**i * y**j when deformed."""

    i: int
    j: int
    sign: int = -1
    deformed: bool = False

    def __post_init__(self):
        if (self.i, self.j) == (0, 0):
            raise ValueError("binomial factor needs a non-constant monomial")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def poly(self) -> LaurentPoly:
        coeff = T * self.sign if self.deformed else TPoly.const(self.sign)
        return LaurentPoly({(0, 0): 1, (self.i, self.j): coeff})

    def evaluate(self, x0: Fraction, y0: Fraction, t0: Fraction) -> Fraction:
        value = Fraction(x0) ** self.i * Fraction(y0) ** self.j
        if self.deformed:
            value *= t0
        return 1 + self.sign * value

    def __str__(self) -> str:
        mono = "*".join(s for s in (_pw("x", self.i), _pw("y", self.j)) if s)
        if self.deformed:
            mono = f"t*{mono}"
        return f"(1 {'+' if self.sign > 0 else '-'} {mono})"


def _pw(var: str, n: int) -> str:
    if n == 0:
        return ""
    return var if n == 1 else f"{var}^{n}"


def _oriented(factor: BinomialFactor) -> tuple[BinomialFactor, LaurentPoly]:
    """Rewrite 1/(1 + sM) as u/(1 + sM^-1) with (i, j) lexicographically positive."""
    if factor.deformed or (factor.i, factor.j) > (0, 0):
        return factor, ONE
    flipped = BinomialFactor(-factor.i, -factor.j, factor.sign)
    return flipped, LaurentPoly.monomial(-factor.i, -factor.j, factor.sign)


def _product(factors: Iterable[BinomialFactor], start: LaurentPoly = ONE) -> LaurentPoly:
    out = start
    for f in factors:
        out = poly_mul(out, f.poly())
    return out


class RationalFn:
    """numerator / prod(denominator), denominator a sorted multiset of BinomialFactor."""

    __slots__ = ("num", "den")

    def __init__(
        self,
        num: LaurentPoly | int = ONE,
        den: Iterable[BinomialFactor] = (),
        *,
        reduce: bool = True,
    ):
        if isinstance(num, int):
            num = LaurentPoly.monomial(0, 0, num)
        factors = []
        for f in den:
            f, unit = _oriented(f)
            if unit != ONE:
                num = poly_mul(num, unit)
            factors.append(f)
        if num.is_zero():
            factors = []
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", tuple(sorted(factors)))
        if reduce:
            self._cancel()

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn is immutable")

    def _cancel(self) -> None:
        num = self.num
        remaining = list(self.den)
        for f in sorted(set(remaining)):
            while f in remaining:
                try:
                    num = num.exact_div(f.poly())
                except NonDivisible:
                    break
                remaining.remove(f)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", tuple(remaining))

    @classmethod
    def monomial(cls, ex: int, ey: int, coeff: TPoly | int = 1) -> "RationalFn":
        return cls(LaurentPoly.monomial(ex, ey, coeff), reduce=False)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFn(other, reduce=False)
        return isinstance(other, RationalFn) and rf_eq(self, other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"RationalFn({format_rational(self)})"

    def __str__(self) -> str:
        return format_rational(self)

    def __add__(self, other: "RationalFn | LaurentPoly | int") -> "RationalFn":
        return rf_add(self, _lift(other))

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den, reduce=False)

    def __sub__(self, other: "RationalFn | LaurentPoly | int") -> "RationalFn":
        return rf_add(self, -_lift(other))

    def __mul__(self, other: "RationalFn | LaurentPoly | TPoly | int") -> "RationalFn":
        if isinstance(other, (int, TPoly)):
            return RationalFn(self.num * other, self.den, reduce=False)
        if isinstance(other, LaurentPoly):
            return rf_mul(self, RationalFn(other, reduce=False))
        if not isinstance(other, RationalFn):
            return NotImplemented
        return rf_mul(self, other)

    __rmul__ = __mul__

    def shift(self, dx: int, dy: int) -> "RationalFn":
        return RationalFn(self.num.shift(dx, dy), self.den, reduce=False)

    def evaluate(self, x0, y0, t0) -> Fraction:
        return eval_at(self, x0, y0, t0)


def _lift(value: "RationalFn | LaurentPoly | int") -> RationalFn:
    if isinstance(value, RationalFn):
        return value
    return RationalFn(value, reduce=False)


RF_ZERO = RationalFn(ZERO, reduce=False)
RF_ONE = RationalFn(ONE, reduce=False)


def _lcm(dens: Iterable[tuple[BinomialFactor, ...]]) -> Counter:
    out: Counter = Counter()
    for den in dens:
        for f, n in Counter(den).items():
            out[f] = max(out[f], n)
    return out


def rf_sum(items: Iterable[RationalFn]) -> RationalFn:
    """Sum over the least common multiset of denominators, then cancel."""
    grouped: dict[tuple[BinomialFactor, ...], LaurentPoly] = {}
    for item in items:
        if item.num.is_zero():
            continue
        grouped[item.den] = grouped.get(item.den, ZERO) + item.num
    grouped = {k: v for k, v in grouped.items() if not v.is_zero()}
    if not grouped:
        return RF_ZERO
    common = _lcm(grouped)
    num = ZERO
    for den, part in grouped.items():
        missing = common - Counter(den)
        num = num + _product(missing.elements(), part)
    return RationalFn(num, common.elements())


def rf_add(a: RationalFn, b: RationalFn) -> RationalFn:
    if b.num.is_zero():
        return a
    if a.num.is_zero():
        return b
    return rf_sum((a, b))


def rf_mul(a: RationalFn, b: RationalFn) -> RationalFn:
    if a.num.is_zero() or b.num.is_zero():
        return RF_ZERO
    return RationalFn(poly_mul(a.num, b.num), a.den + b.den)


def rf_eq(a: RationalFn, b: RationalFn) -> bool:
    """a == b by cross-multiplication, after dropping shared denominator factors."""
    da, db = Counter(a.den), Counter(b.den)
    lhs = _product((db - da).elements(), a.num)
    rhs = _product((da - db).elements(), b.num)
    return lhs == rhs


def eval_at(p: LaurentPoly | RationalFn, x0, y0, t0) -> Fraction:
    """Exact value at rational (x0, y0, t0)."""
    x0, y0, t0 = Fraction(x0), Fraction(y0), Fraction(t0)
    try:
        if isinstance(p, LaurentPoly):
            return p.evaluate(x0, y0, t0)
        value = p.num.evaluate(x0, y0, t0)
        for f in p.den:
            d = f.evaluate(x0, y0, t0)
            if d == 0:
                raise PoleError(f"{f} vanishes at x={x0}, y={y0}")
            value /= d
        return value
    except ZeroDivisionError as e:
        raise PoleError(f"negative power of zero at x={x0}, y={y0}") from e


def format_rational(r: RationalFn, var_t: str = "t") -> str:
    """Canonical factored form: (numerator)/(f1*f2*...)."""
    num = format_poly(r.num, var_t)
    if not r.den:
        return num
    den = "*".join(str(f) for f in r.den)
    return f"({num})/({den})"
