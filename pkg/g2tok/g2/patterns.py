"""G2 Littelmann patterns (a, b, c, d, e, f) of B(theta + rho).

Inequalities, for theta + rho = l1*varpi_1 + l2*varpi_2:

    0   <= f <= l2 + a - 2b + c - 2d + e
    b   <= a <= l1 + 3b - 2c + 3d - 2e
    c/2 <= b <= l2 + c - 2d + e
    2d  <= c <= l1 + 3d - 2e
    e   <= d <= l2 + e
    0   <= e <= l1
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from g2tok.g2.roots import WeightParams

ENTRIES = ("a", "b", "c", "d", "e", "f")


@dataclass(frozen=True, slots=True)
class Pattern:
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def weight_monomial(self) -> tuple[int, int]:
        """Exponent pair of x^(a+c+e) y^(b+d+f)."""
        return (self.a + self.c + self.e, self.b + self.d + self.f)


class EntryStatus(str, Enum):
    PLAIN = "plain"
    CIRCLED = "circled"
    BOXED = "boxed"
    BOTH = "both"

    @classmethod
    def of(cls, circled: bool, boxed: bool) -> "EntryStatus":
        if circled and boxed:
            return cls.BOTH
        if circled:
            return cls.CIRCLED
        if boxed:
            return cls.BOXED
        return cls.PLAIN


@dataclass(frozen=True, slots=True)
class Decoration:
    circled: frozenset[str]
    boxed: frozenset[str]

    def status(self, entry: str) -> EntryStatus:
        return EntryStatus.of(entry in self.circled, entry in self.boxed)


def bounds(entry: str, p: Pattern, w: WeightParams) -> tuple[Fraction, int]:
    """Lower and upper Littelmann bound of `entry`; only b has a non-integral lower bound."""
    a, b, c, d, e = p.a, p.b, p.c, p.d, p.e
    l1, l2 = w.l1, w.l2
    match entry:
        case "f":
            return Fraction(0), l2 + a - 2 * b + c - 2 * d + e
        case "a":
            return Fraction(b), l1 + 3 * b - 2 * c + 3 * d - 2 * e
        case "b":
            return Fraction(c, 2), l2 + c - 2 * d + e
        case "c":
            return Fraction(2 * d), l1 + 3 * d - 2 * e
        case "d":
            return Fraction(e), l2 + e
        case "e":
            return Fraction(0), l1
    raise ValueError(f"unknown pattern entry: {entry!r}")


def is_valid(p: Pattern, w: WeightParams) -> bool:
    if min(p.as_tuple()) < 0:
        return False
    for entry in ENTRIES:
        low, high = bounds(entry, p, w)
        if not low <= getattr(p, entry) <= high:
            return False
    return True


def decorations(p: Pattern, w: WeightParams) -> Decoration:
    """Circled: value at its lower bound (b only when 2b = c). Boxed: at its upper bound."""
    circled, boxed = set(), set()
    for entry in ENTRIES:
        value = getattr(p, entry)
        low, high = bounds(entry, p, w)
        if value == low:
            circled.add(entry)
        if value == high:
            boxed.add(entry)
    return Decoration(frozenset(circled), frozenset(boxed))


def has_bad_middle(p: Pattern) -> bool:
    return p.b == p.d + 1 and p.c == 2 * p.d + 1


def iter_patterns(w: WeightParams, e_values: Iterable[int] | None = None) -> Iterator[Pattern]:
    """Nested loops in the order e, d, c, b, a, f; `e_values` restricts the outer index."""
    l1, l2 = w.l1, w.l2
    for e in e_values if e_values is not None else range(l1 + 1):
        for d in range(e, l2 + e + 1):
            for c in range(2 * d, l1 + 3 * d - 2 * e + 1):
                for b in range((c + 1) // 2, l2 + c - 2 * d + e + 1):
                    for a in range(b, l1 + 3 * b - 2 * c + 3 * d - 2 * e + 1):
                        for f in range(l2 + a - 2 * b + c - 2 * d + e + 1):
                            yield Pattern(a, b, c, d, e, f)


def enumerate_patterns(w: WeightParams) -> list[Pattern]:
    return list(iter_patterns(w))


def format_pattern(p: Pattern, w: WeightParams | None = None) -> str:
    """`a b c d e f`; with w, circled entries read `u°` and boxed ones `[u]`."""
    if w is None:
        return " ".join(str(v) for v in p.as_tuple())
    dec = decorations(p, w)
    cells = []
    for entry in ENTRIES:
        text = str(getattr(p, entry))
        if entry in dec.boxed:
            text = f"[{text}]"
        if entry in dec.circled:
            text += "°"
        cells.append(text)
    return " ".join(cells)
