"""Published multi-degree tables, transcribed as data.

A coefficient is a sum of parts sign * T_k(x), optionally times q^-1 x^i y.
"""

from dataclasses import dataclass, replace
from itertools import product

from g2tok.core.multidegree import REFERENCE_FNS, Degree, degree
from g2tok.core.poly import T as T_VAR
from g2tok.core.rational import RationalFn, rf_sum


@dataclass(frozen=True)
class Part:
    sign: int
    name: str
    power: int = 0

    def value(self) -> RationalFn:
        fn = REFERENCE_FNS[self.name]()
        if self.power:
            fn = fn.shift(self.power, 1) * T_VAR
        return fn * self.sign

    def label(self) -> str:
        mono = f"q^-1 x^{self.power}y " if self.power else ""
        return f"{mono}{self.name}(x)"


@dataclass(frozen=True)
class PrintedRow:
    degree: Degree
    parts: tuple[Part, ...]

    def value(self) -> RationalFn:
        return rf_sum(p.value() for p in self.parts)

    def label(self) -> str:
        return format_parts(self.parts)

    def power_variants(self) -> list["PrintedRow"]:
        """Rows with each q^-1 x^i y monomial read as x^2 y or x^3 y, the printed one excluded."""
        options = [
            [p] if not p.power else [replace(p, power=2), replace(p, power=3)] for p in self.parts
        ]
        rows = [PrintedRow(self.degree, tuple(combo)) for combo in product(*options)]
        return [r for r in rows if r.parts != self.parts]


def format_parts(parts: tuple[Part, ...]) -> str:
    out = ""
    for i, p in enumerate(parts):
        if i == 0:
            out = ("-" if p.sign < 0 else "") + p.label()
        else:
            out += f" {'-' if p.sign < 0 else '+'} {p.label()}"
    return out or "0"


def _row(deg: tuple[int, int, int, int], *parts: tuple[str, str] | tuple[str, str, int]):
    return PrintedRow(
        degree(*deg),
        tuple(Part(-1 if p[0] == "-" else 1, p[1], p[2] if len(p) > 2 else 0) for p in parts),
    )


PRINTED_WEYL: tuple[PrintedRow, ...] = (
    _row((1, 0, 0, 0), ("-", "T")),
    _row((1, 1, 0, 1), ("+", "T")),
    _row((0, 0, 0, 0), ("+", "T")),
    _row((0, 0, 0, 1), ("-", "T")),
    _row((1, 0, 3, 1), ("-", "T")),
    _row((3, 1, 3, 1), ("+", "T")),
    _row((3, 1, 6, 3), ("-", "T")),
    _row((4, 2, 6, 3), ("+", "T")),
    _row((1, 1, 3, 3), ("-", "T")),
    _row((3, 2, 3, 3), ("-", "T")),
    _row((3, 2, 6, 4), ("+", "T")),
    _row((4, 2, 6, 4), ("-", "T")),
)

PRINTED_STD: tuple[PrintedRow, ...] = (
    _row((1, 0, 0, 0), ("-", "T"), ("+", "T1", 2)),
    _row((1, 1, 0, 1), ("+", "T"), ("-", "T2", 2)),
    _row((1, 0, 4, 2), ("-", "T1", 2)),
    _row((1, 1, 4, 3), ("+", "T2", 2)),
    _row((0, 0, 3, 2), ("+", "T3", 3)),
    _row((4, 2, 3, 2), ("-", "T3", 3)),
    _row((4, 2, 4, 2), ("+", "T1", 3)),
    _row((4, 2, 4, 3), ("-", "T2", 3)),
    _row((0, 0, 0, 0), ("+", "T"), ("-", "T1", 2)),
    _row((0, 0, 0, 1), ("-", "T"), ("+", "T2", 2)),
    _row((1, 0, 3, 1), ("-", "T")),
    _row((3, 1, 3, 1), ("+", "T")),
    _row((3, 1, 6, 3), ("-", "T")),
    _row((4, 2, 6, 3), ("+", "T")),
    _row((1, 1, 3, 3), ("-", "T")),
    _row((3, 2, 3, 3), ("-", "T")),
    _row((3, 2, 6, 4), ("+", "T")),
    _row((4, 2, 6, 4), ("-", "T")),
)

PRINTED_ADJ: tuple[PrintedRow, ...] = (
    _row((1, 0, 0, 0), ("-", "T1", 2)),
    _row((1, 1, 0, 1), ("+", "T2", 2)),
    _row((1, 0, 4, 2), ("+", "T1", 2)),
    _row((1, 1, 4, 3), ("-", "T2", 3)),
    _row((0, 0, 3, 2), ("-", "T3", 3)),
    _row((4, 2, 3, 2), ("+", "T3", 2)),
    _row((4, 2, 4, 2), ("-", "T1", 2)),
    _row((4, 2, 4, 3), ("+", "T2", 2)),
    _row((0, 0, 0, 0), ("+", "T1", 2)),
    _row((0, 0, 0, 1), ("-", "T2", 2)),
)

# rows whose printed x^2 y / x^3 y monomials disagree between the standard and adjusted tables
SUSPECT_DEGREES = frozenset(
    degree(*d) for d in ((1, 1, 4, 3), (4, 2, 3, 2), (4, 2, 4, 2), (4, 2, 4, 3))
)
