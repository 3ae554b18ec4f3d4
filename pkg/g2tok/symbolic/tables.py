"""Collecting symbolic sums into multi-degree tables.

With l1 = 2 m1 + eps1 and l2 = 2 m2 + eps2 every parity gate becomes a constant
and every exponent an integer-linear form in m1, m2. Terms are grouped by their
multi-degree and summed in that m-view; the coefficient is then moved back to
the l-view by the factor x^(-(m1 eps1 + m2 eps2)) y^(-(n1 eps1 + n2 eps2)).
"""

from fractions import Fraction
from functools import cache
from itertools import product

from g2tok.core.errors import NonAffineError, UnresolvedParity
from g2tok.core.multidegree import Degree, MultiDegreeTable, T_fn
from g2tok.core.rational import RationalFn, format_rational, rf_sum
from g2tok.schemas.tables import TableModel, TableRow
from g2tok.symbolic.engine import adj_symbolic, std_symbolic
from g2tok.symbolic.printed import Part, format_parts
from g2tok.symbolic.terms import SymSum

PARITIES: tuple[tuple[int, int], ...] = ((0, 0), (0, 1), (1, 0), (1, 1))


def collect(s: SymSum, eps1: int, eps2: int) -> MultiDegreeTable:
    extra = s.free_variables() - {"l1", "l2"}
    if extra:
        raise UnresolvedParity(f"free variables left before collection: {sorted(extra)}")
    fixed = {"l1": eps1, "l2": eps2}
    pairs = []
    for term in s:
        if not all(c.holds(fixed) for c in term.conds):
            continue
        cx, cy = term.xexp.evaluate(fixed), term.yexp.evaluate(fixed)
        if cx.denominator != 1 or cy.denominator != 1:
            raise NonAffineError(f"half-integral exponent survives the parity split: {term}")
        pairs.append((term.raw_degree(), term.coeff.shift(int(cx), int(cy))))
    entries = {}
    for deg, coeff in MultiDegreeTable.from_pairs(pairs).items():
        (m1, n1), (m2, n2) = deg
        sx, sy = -(m1 * eps1 + m2 * eps2), -(n1 * eps1 + n2 * eps2)
        if sx.denominator == 1 and sy.denominator == 1:
            coeff = coeff.shift(int(sx), int(sy))
        entries[deg] = coeff
    return MultiDegreeTable(entries)


@cache
def std_table(eps1: int = 0, eps2: int = 0) -> MultiDegreeTable:
    return collect(std_symbolic(), eps1, eps2)


@cache
def adj_table(eps1: int = 0, eps2: int = 0) -> MultiDegreeTable:
    return collect(adj_symbolic(), eps1, eps2)


def final_table(eps1: int = 0, eps2: int = 0) -> MultiDegreeTable:
    return std_table(eps1, eps2) + adj_table(eps1, eps2)


@cache
def _candidates() -> list[tuple[tuple[Part, ...], RationalFn]]:
    shifted = [
        Part(sign, name, power)
        for sign, name, power in product((1, -1), ("T1", "T2", "T3"), (2, 3))
    ]
    out = []
    for lead, extra in product([None, Part(1, "T"), Part(-1, "T")], [None, *shifted]):
        parts = tuple(p for p in (lead, extra) if p is not None)
        if parts:
            out.append((parts, rf_sum(p.value() for p in parts)))
    return out


def identify(coeff: RationalFn) -> str | None:
    """Read a coefficient as +-T, +-q^-1 x^i y T_k, or a sum of one of each."""
    if coeff.is_zero():
        return "0"
    for parts, value in _candidates():
        if coeff == value:
            return format_parts(parts)
    return None


def is_plus_minus_T(coeff: RationalFn) -> bool:
    t = T_fn()
    return coeff == t or coeff == -t


def _num(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def table_model(
    name: str, table: MultiDegreeTable, parity: tuple[int, int] | None = None
) -> TableModel:
    rows = []
    for deg, coeff in table.items():
        (m1, n1), (m2, n2) = deg
        rows.append(
            TableRow(
                m1=_num(m1),
                n1=_num(n1),
                m2=_num(m2),
                n2=_num(n2),
                coefficient=format_rational(coeff),
                identified=identify(coeff),
            )
        )
    return TableModel(name=name, parity=parity, rows=rows)


def raw_stats(s: SymSum) -> tuple[int, frozenset[Degree]]:
    """Term count and distinct multi-degrees before collection."""
    return len(s), s.raw_degrees()
