"""Multi-degree tables and the reference coefficients T, T1, T2, T3.

A multi-degree ((m1, n1), (m2, n2)) names the term
(x^l1)^m1 (y^l1)^n1 (x^l2)^m2 (y^l2)^n2. Entries may be half-integers while a
table is being assembled, so degrees are stored as Fractions.
"""

from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction

from g2tok.core.poly import ONE, ONE_MINUS_T, LaurentPoly, poly_mul
from g2tok.core.rational import RF_ZERO, BinomialFactor, RationalFn, rf_sum

Degree = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]

POSITIVE_ROOT_MONOMIALS: tuple[tuple[int, int], ...] = (
    (1, 0),
    (0, 1),
    (1, 1),
    (2, 1),
    (3, 1),
    (3, 2),
)


def degree(m1, n1, m2, n2) -> Degree:
    return ((Fraction(m1), Fraction(n1)), (Fraction(m2), Fraction(n2)))


def format_degree(deg: Degree) -> str:
    (m1, n1), (m2, n2) = deg
    return f"(({_num(m1)},{_num(n1)}),({_num(m2)},{_num(n2)}))"


def _num(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def deformed(i: int, j: int) -> LaurentPoly:
    """1 - t x^i y^j."""
    return BinomialFactor(i, j, -1, deformed=True).poly()


def _numerator(*monomials: tuple[int, int], t_factors: int = 0) -> LaurentPoly:
    out = ONE
    for _ in range(t_factors):
        out = out * ONE_MINUS_T
    for i, j in monomials:
        out = poly_mul(out, deformed(i, j))
    return out


def _den(*monomials: tuple[int, int], plus: tuple[tuple[int, int], ...] = ()) -> list:
    return [BinomialFactor(i, j) for i, j in monomials] + [
        BinomialFactor(i, j, 1) for i, j in plus
    ]


def T_fn() -> RationalFn:
    """D(x) / prod_{alpha>0}(1 - x^alpha)."""
    return RationalFn(
        _numerator(*POSITIVE_ROOT_MONOMIALS), _den(*POSITIVE_ROOT_MONOMIALS), reduce=False
    )


def T1_fn() -> RationalFn:
    return RationalFn(
        _numerator((1, 0), (0, 1), (3, 2), t_factors=1),
        _den((1, 0), (0, 1), (4, 2), (3, 2)),
        reduce=False,
    )


def T2_fn() -> RationalFn:
    return RationalFn(
        _numerator((0, 1), (1, 1), (3, 1), t_factors=1),
        _den((0, 1), (1, 1), (4, 2), (3, 1)),
        reduce=False,
    )


def T3_fn() -> RationalFn:
    return RationalFn(
        _numerator((0, 1), (4, 2), t_factors=2),
        _den((1, 0), (1, 1), (3, 1), (3, 2), plus=((2, 1),)),
        reduce=False,
    )


REFERENCE_FNS = {"T": T_fn, "T1": T1_fn, "T2": T2_fn, "T3": T3_fn}


class MultiDegreeTable:
    """Degree -> RationalFn coefficient; degrees whose coefficient is zero are dropped."""

    def __init__(self, entries: Mapping[Degree, RationalFn] | None = None):
        self._entries = {k: v for k, v in (entries or {}).items() if not v.is_zero()}

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Degree, RationalFn]]) -> "MultiDegreeTable":
        """Group by degree and sum each group exactly."""
        grouped: dict[Degree, list[RationalFn]] = {}
        for deg, coeff in pairs:
            grouped.setdefault(deg, []).append(coeff)
        return cls({deg: rf_sum(parts) for deg, parts in grouped.items()})

    def __getitem__(self, deg: Degree) -> RationalFn:
        return self._entries.get(deg, RF_ZERO)

    def __contains__(self, deg: Degree) -> bool:
        return deg in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Degree]:
        return iter(sorted(self._entries))

    def items(self) -> list[tuple[Degree, RationalFn]]:
        return [(k, self._entries[k]) for k in sorted(self._entries)]

    def support(self) -> frozenset[Degree]:
        return frozenset(self._entries)

    def __add__(self, other: "MultiDegreeTable") -> "MultiDegreeTable":
        return MultiDegreeTable.from_pairs([*self.items(), *other.items()])

    def same_as(self, other: "MultiDegreeTable") -> bool:
        if self.support() != other.support():
            return False
        return all(self[k] == other[k] for k in self._entries)
