"""Symbolic terms coeff * x^xexp * y^yexp * prod 1_0(...) and finite sums of them."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from g2tok.core.config import get_max_terms
from g2tok.core.errors import NonAffineError, TermLimitError
from g2tok.core.multidegree import Degree, degree
from g2tok.core.poly import TPoly
from g2tok.core.rational import RF_ONE, RationalFn, rf_sum
from g2tok.symbolic.forms import (
    AffineForm,
    ParityCond,
    format_conditions,
    reduce_conditions,
    substitute_condition,
)


@dataclass(frozen=True, eq=False, slots=True)
class SymTerm:
    coeff: RationalFn
    xexp: AffineForm
    yexp: AffineForm
    conds: frozenset[ParityCond] = frozenset()

    @property
    def key(self) -> tuple[AffineForm, AffineForm, frozenset[ParityCond]]:
        return (self.xexp, self.yexp, self.conds)

    def condition_on(self, var: str) -> ParityCond | None:
        """The condition involving `var`; reduced sets hold at most one for the leading variable."""
        found = [c for c in self.conds if c.involves(var)]
        if len(found) > 1:
            raise NonAffineError(f"{len(found)} parity conditions involve {var}")
        return found[0] if found else None

    def at(self, var: str, value: AffineForm) -> "SymTerm | None":
        """Substitute var := value everywhere; None when the conditions become unsatisfiable."""
        conds = reduce_conditions(substitute_condition(c, var, value) for c in self.conds)
        if conds is None:
            return None
        return SymTerm(
            self.coeff, self.xexp.substitute(var, value), self.yexp.substitute(var, value), conds
        )

    def with_condition(self, cond: ParityCond | bool) -> "SymTerm | None":
        conds = reduce_conditions([*self.conds, cond])
        if conds is None:
            return None
        return SymTerm(self.coeff, self.xexp, self.yexp, conds)

    def scaled(self, factor: RationalFn | TPoly | int) -> "SymTerm":
        return SymTerm(self.coeff * factor, self.xexp, self.yexp, self.conds)

    def raw_degree(self) -> Degree:
        """Multi-degree: coefficients of l1 and l2 in the x and y exponents."""
        x, y = self.xexp, self.yexp
        return degree(x.coeff("l1"), y.coeff("l1"), x.coeff("l2"), y.coeff("l2"))

    def evaluate(self, assignment: Mapping[str, int]) -> RationalFn | None:
        if not all(c.holds(assignment) for c in self.conds):
            return None
        ex, ey = self.xexp.evaluate(assignment), self.yexp.evaluate(assignment)
        if ex.denominator != 1 or ey.denominator != 1:
            raise NonAffineError(f"non-integral exponent ({ex}, {ey}) at {dict(assignment)}")
        return self.coeff.shift(int(ex), int(ey))

    def __str__(self) -> str:
        conds = format_conditions(self.conds)
        body = f"[{self.coeff}] x^({self.xexp}) y^({self.yexp})"
        return f"{body} {conds}" if conds else body


class SymSum:
    """An immutable finite sum of SymTerm.

    Like terms are combined on construction unless `merge` is False; an unmerged
    sum keeps every term its summation steps produce, and so does everything
    derived from it.
    """

    __slots__ = ("terms", "merge")

    def __init__(self, terms: Iterable[SymTerm | None] = (), merge: bool = True):
        live = (t for t in terms if t is not None and not t.coeff.is_zero())
        out = _combine(live) if merge else list(live)
        limit = get_max_terms()
        if len(out) > limit:
            raise TermLimitError(f"symbolic sum reached {len(out)} terms (G2TOK_MAX_TERMS={limit})")
        object.__setattr__(self, "terms", tuple(out))
        object.__setattr__(self, "merge", merge)

    def __setattr__(self, name, value):
        raise AttributeError("SymSum is immutable")

    @classmethod
    def monomial(
        cls, xexp: AffineForm, yexp: AffineForm, coeff: RationalFn = RF_ONE, merge: bool = True
    ) -> "SymSum":
        return cls([SymTerm(coeff, xexp, yexp)], merge=merge)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other: "SymSum") -> "SymSum":
        return SymSum([*self.terms, *other.terms], merge=self.merge and other.merge)

    def __neg__(self) -> "SymSum":
        return self.scaled(-1)

    def __sub__(self, other: "SymSum") -> "SymSum":
        return self + (-other)

    def scaled(self, factor: RationalFn | TPoly | int) -> "SymSum":
        return SymSum((t.scaled(factor) for t in self.terms), merge=self.merge)

    def substitute(self, var: str, value: AffineForm) -> "SymSum":
        return SymSum((t.at(var, value) for t in self.terms), merge=self.merge)

    def free_variables(self) -> frozenset[str]:
        out: set[str] = set()
        for t in self.terms:
            out.update(t.xexp.variables, t.yexp.variables)
            for c in t.conds:
                out.update(c.odd)
        return frozenset(out)

    def raw_degrees(self) -> frozenset[Degree]:
        return frozenset(t.raw_degree() for t in self.terms)

    def evaluate(self, assignment: Mapping[str, int]) -> RationalFn:
        """Exact value at a concrete assignment of every free variable."""
        return rf_sum(v for v in (t.evaluate(assignment) for t in self.terms) if v is not None)


def _combine(terms: Iterable[SymTerm]) -> list[SymTerm]:
    merged: dict[tuple, list[RationalFn]] = {}
    first: dict[tuple, SymTerm] = {}
    for term in terms:
        merged.setdefault(term.key, []).append(term.coeff)
        first.setdefault(term.key, term)
    out = []
    for key, coeffs in merged.items():
        coeff = coeffs[0] if len(coeffs) == 1 else rf_sum(coeffs)
        if not coeff.is_zero():
            t = first[key]
            out.append(SymTerm(coeff, t.xexp, t.yexp, t.conds))
    return out


def half(f: AffineForm) -> AffineForm:
    return f * Fraction(1, 2)
