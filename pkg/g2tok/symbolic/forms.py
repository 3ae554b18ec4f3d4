"""Affine forms in the pattern entries and l1, l2, and parity conditions over them.

A set of parity conditions is a linear system over GF(2). It is kept in reduced
row echelon form with pivots taken in VARIABLES order, which makes the set
canonical and guarantees that the lowest-ranked variable present appears in at
most one condition.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from g2tok.core.errors import NonAffineError

VARIABLES = ("f", "a", "b", "c", "d", "e", "l1", "l2")
_RANK = {v: i for i, v in enumerate(VARIABLES)}


def _rank(var: str) -> int:
    try:
        return _RANK[var]
    except KeyError:
        raise ValueError(f"unknown variable: {var!r}") from None


def _by_rank(item: tuple[str, Fraction]) -> int:
    return _rank(item[0])


@dataclass(frozen=True, slots=True)
class AffineForm:
    """constant + sum coeff * var, rational coefficients, zero coefficients dropped."""

    constant: Fraction = Fraction(0)
    coeffs: tuple[tuple[str, Fraction], ...] = ()

    def __post_init__(self):
        merged: dict[str, Fraction] = {}
        for var, c in self.coeffs:
            _rank(var)
            merged[var] = merged.get(var, Fraction(0)) + Fraction(c)
        clean = tuple(sorted(((v, c) for v, c in merged.items() if c), key=_by_rank))
        object.__setattr__(self, "constant", Fraction(self.constant))
        object.__setattr__(self, "coeffs", clean)

    def coeff(self, var: str) -> Fraction:
        for v, c in self.coeffs:
            if v == var:
                return c
        return Fraction(0)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.coeffs)

    def is_integral(self) -> bool:
        return self.constant.denominator == 1 and all(c.denominator == 1 for _, c in self.coeffs)

    def __add__(self, other: "AffineForm | int | Fraction") -> "AffineForm":
        other = _lift(other)
        return AffineForm(self.constant + other.constant, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self) -> "AffineForm":
        return self * -1

    def __sub__(self, other: "AffineForm | int | Fraction") -> "AffineForm":
        return self + (-_lift(other))

    def __rsub__(self, other: int | Fraction) -> "AffineForm":
        return _lift(other) - self

    def __mul__(self, k: int | Fraction) -> "AffineForm":
        k = Fraction(k)
        return AffineForm(self.constant * k, tuple((v, c * k) for v, c in self.coeffs))

    __rmul__ = __mul__

    def substitute(self, var: str, value: "AffineForm | int") -> "AffineForm":
        c = self.coeff(var)
        if not c:
            return self
        rest = AffineForm(self.constant, tuple((v, k) for v, k in self.coeffs if v != var))
        return rest + _lift(value) * c

    def evaluate(self, assignment: Mapping[str, int | Fraction]) -> Fraction:
        total = self.constant
        for v, c in self.coeffs:
            if v not in assignment:
                raise KeyError(f"no value for {v!r}")
            total += c * assignment[v]
        return total

    def __str__(self) -> str:
        parts = []
        for v, c in self.coeffs:
            mag = abs(c)
            body = v if mag == 1 else f"{mag}{v}" if mag.denominator == 1 else f"({mag}){v}"
            parts.append(("-" if c < 0 else "+", body))
        if self.constant or not parts:
            parts.append(("-" if self.constant < 0 else "+", str(abs(self.constant))))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def form(constant: int | Fraction = 0, **coeffs: int | Fraction) -> AffineForm:
    """form(-1, l2=1, a=1, d=-2) is l2 + a - 2d - 1."""
    return AffineForm(Fraction(constant), tuple((v, Fraction(c)) for v, c in coeffs.items()))


def var(name: str) -> AffineForm:
    return form(**{name: 1})


def _lift(value: "AffineForm | int | Fraction") -> AffineForm:
    if isinstance(value, AffineForm):
        return value
    return AffineForm(Fraction(value))


@dataclass(frozen=True, slots=True)
class ParityCond:
    """1_0(sum of `odd` + bit): holds when that sum is even."""

    odd: frozenset[str]
    bit: int

    @property
    def form(self) -> AffineForm:
        return form(self.bit, **{v: 1 for v in self.odd})

    def involves(self, var: str) -> bool:
        return var in self.odd

    def holds(self, assignment: Mapping[str, int]) -> bool:
        return (self.bit + sum(int(assignment[v]) for v in self.odd)) % 2 == 0

    def __str__(self) -> str:
        return f"1_0({self.form})"


def parity(f: AffineForm) -> ParityCond | bool:
    """1_0(f) reduced mod 2; a constant form collapses to True or False."""
    if not f.is_integral():
        raise NonAffineError(f"parity condition on a non-integral form: {f}")
    odd = frozenset(v for v, c in f.coeffs if c.numerator % 2)
    bit = int(f.constant) % 2
    if not odd:
        return bit == 0
    return ParityCond(odd, bit)


def substitute_condition(cond: ParityCond, var: str, value: AffineForm) -> ParityCond | bool:
    return parity(cond.form.substitute(var, value))


def reduce_conditions(conds: Iterable[ParityCond | bool]) -> frozenset[ParityCond] | None:
    """Canonical reduced form of a condition set, or None when it is unsatisfiable."""
    rows: list[tuple[set[str], int]] = []
    for cond in conds:
        if cond is True:
            continue
        if cond is False:
            return None
        rows.append((set(cond.odd), cond.bit))
    pivots: list[tuple[set[str], int]] = []
    columns = sorted({v for vs, _ in rows for v in vs}, key=_rank)
    for col in columns:
        idx = next((i for i, (vs, _) in enumerate(rows) if col in vs), None)
        if idx is None:
            continue
        pv, pb = rows.pop(idx)
        rows = [(vs ^ pv, b ^ pb) if col in vs else (vs, b) for vs, b in rows]
        pivots = [(vs ^ pv, b ^ pb) if col in vs else (vs, b) for vs, b in pivots]
        pivots.append((pv, pb))
    if any(b for vs, b in rows if not vs):
        return None
    return frozenset(ParityCond(frozenset(vs), b) for vs, b in pivots)


def format_conditions(conds: Iterable[ParityCond]) -> str:
    return " ".join(sorted(str(c) for c in conds))
