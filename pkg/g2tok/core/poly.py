"""Exact Laurent polynomials in x, y over Z[t], t = 1/q.

Values are immutable. Coefficients are Python ints, so nothing overflows.
"""

import heapq
from collections.abc import Iterable, Mapping
from fractions import Fraction
from types import MappingProxyType

from g2tok.core.errors import NonDivisible

Exponent = tuple[int, int]


class TPoly:
    """Integer polynomial in t; index i of `coeffs` holds the coefficient of t**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("TPoly is immutable")

    @classmethod
    def const(cls, value: int) -> "TPoly":
        return cls((value,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = TPoly.const(other)
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TPoly({list(self.coeffs)})"

    def __add__(self, other: "TPoly | int") -> "TPoly":
        if isinstance(other, int):
            other = TPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return TPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly(-v for v in self.coeffs)

    def __sub__(self, other: "TPoly | int") -> "TPoly":
        if isinstance(other, int):
            other = TPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "TPoly":
        return TPoly.const(other) - self

    def __mul__(self, other: "TPoly | int") -> "TPoly":
        if isinstance(other, int):
            return TPoly(v * other for v in self.coeffs)
        if not isinstance(other, TPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return T_ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, u in enumerate(self.coeffs):
            if u:
                for j, v in enumerate(other.coeffs):
                    out[i + j] += u * v
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TPoly":
        out = T_ONE
        for _ in range(n):
            out = out * self
        return out

    def exact_div(self, other: "TPoly") -> "TPoly":
        """Quotient q with q * other == self, or NonDivisible."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial in t")
        rem = list(self.coeffs)
        d = other.coeffs
        lc = d[-1]
        q = [0] * max(len(rem) - len(d) + 1, 0)
        while rem:
            shift = len(rem) - len(d)
            if shift < 0 or rem[-1] % lc:
                raise NonDivisible(f"{self!r} is not divisible by {other!r}")
            c = rem[-1] // lc
            q[shift] = c
            for i, v in enumerate(d):
                rem[shift + i] -= c * v
            while rem and rem[-1] == 0:
                rem.pop()
        return TPoly(q)

    def evaluate(self, t0: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for v in reversed(self.coeffs):
            acc = acc * t0 + v
        return acc

    def __str__(self) -> str:
        return format_tpoly(self)


T_ZERO = TPoly()
T_ONE = TPoly.const(1)
T = TPoly((0, 1))
ONE_MINUS_T = TPoly((1, -1))


def format_tpoly(p: TPoly, var: str = "t") -> str:
    if not p:
        return "0"
    parts = []
    for i, v in enumerate(p.coeffs):
        if not v:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            body = str(abs(v))
        elif abs(v) == 1:
            body = mono
        else:
            body = f"{abs(v)}*{mono}"
        parts.append(("-" if v < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class LaurentPoly:
    """Finitely supported map (ex, ey) -> nonzero TPoly."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, TPoly | int] | None = None):
        clean: dict[Exponent, TPoly] = {}
        for key, value in (terms or {}).items():
            if isinstance(value, int):
                value = TPoly.const(value)
            if value:
                clean[(int(key[0]), int(key[1]))] = value
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def monomial(cls, ex: int, ey: int, coeff: TPoly | int = 1) -> "LaurentPoly":
        return cls({(ex, ey): coeff})

    @classmethod
    def from_coefficients(cls, table: Mapping[Exponent, Iterable[int]]) -> "LaurentPoly":
        return cls({k: TPoly(v) for k, v in table.items()})

    @property
    def terms(self) -> Mapping[Exponent, TPoly]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, ex: int, ey: int) -> TPoly:
        return self._terms.get((ex, ey), T_ZERO)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.monomial(0, 0, other)
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)})"

    def __str__(self) -> str:
        return format_poly(self)

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return poly_add(self, _lift(other))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return poly_add(self, -_lift(other))

    def __rsub__(self, other: int) -> "LaurentPoly":
        return poly_add(_lift(other), -self)

    def __mul__(self, other: "LaurentPoly | TPoly | int") -> "LaurentPoly":
        if isinstance(other, (int, TPoly)):
            return LaurentPoly({k: v * other for k, v in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        out = ONE
        for _ in range(n):
            out = poly_mul(out, self)
        return out

    def shift(self, dx: int, dy: int) -> "LaurentPoly":
        """Multiply by the monomial x**dx * y**dy."""
        if dx == 0 and dy == 0:
            return self
        return LaurentPoly({(i + dx, j + dy): v for (i, j), v in self._terms.items()})

    def min_exponents(self) -> Exponent:
        return (min(i for i, _ in self._terms), min(j for _, j in self._terms))

    def at_t(self, t0: int) -> "LaurentPoly":
        """Specialize t to an integer."""
        return LaurentPoly({k: TPoly.const(int(v.evaluate(t0))) for k, v in self._terms.items()})

    def evaluate(self, x0: Fraction | int, y0: Fraction | int, t0: Fraction | int) -> Fraction:
        x0, y0, t0 = Fraction(x0), Fraction(y0), Fraction(t0)
        total = Fraction(0)
        for (i, j), v in self._terms.items():
            total += v.evaluate(t0) * x0**i * y0**j
        return total

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        return poly_div_exact(self, divisor)

    def to_json(self) -> list[dict]:
        return [
            {"ex": i, "ey": j, "t": list(self._terms[(i, j)].coeffs)}
            for i, j in sorted(self._terms)
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "LaurentPoly":
        return cls({(int(d["ex"]), int(d["ey"])): TPoly(d["t"]) for d in data})


def _lift(value: "LaurentPoly | int") -> LaurentPoly:
    if isinstance(value, int):
        return LaurentPoly.monomial(0, 0, value)
    return value


ZERO = LaurentPoly()
ONE = LaurentPoly.monomial(0, 0, 1)


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if not q._terms:
        return p
    out = dict(p._terms)
    for k, v in q._terms.items():
        out[k] = out[k] + v if k in out else v
    return LaurentPoly(out)


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    out: dict[Exponent, TPoly] = {}
    for (i1, j1), u in p._terms.items():
        for (i2, j2), v in q._terms.items():
            k = (i1 + i2, j1 + j2)
            w = u * v
            out[k] = out[k] + w if k in out else w
    return LaurentPoly(out)


def poly_div_exact(n: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Exact quotient by leading-term elimination, lexicographic on (ex, ey).

    Both operands are first shifted so their minimal exponents are 0; a single
    divisor then has zero remainder exactly when it divides.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if n.is_zero():
        return ZERO
    sx, sy = n.min_exponents()
    dx, dy = d.min_exponents()
    rem = {(i - sx, j - sy): v for (i, j), v in n._terms.items()}
    div = {(i - dx, j - dy): v for (i, j), v in d._terms.items()}
    lead_d = max(div)
    lc_d = div[lead_d]
    heap = [(-i, -j) for i, j in rem]
    heapq.heapify(heap)
    quotient: dict[Exponent, TPoly] = {}
    while rem:
        ni, nj = heapq.heappop(heap)
        lead = (-ni, -nj)
        if lead not in rem:
            continue
        qx, qy = lead[0] - lead_d[0], lead[1] - lead_d[1]
        if qx < 0 or qy < 0:
            raise NonDivisible("nonzero remainder in exact division")
        c = rem[lead].exact_div(lc_d)
        quotient[(qx, qy)] = c
        for (i, j), v in div.items():
            k = (i + qx, j + qy)
            new = rem[k] - v * c if k in rem else -(v * c)
            if new:
                if k not in rem:
                    heapq.heappush(heap, (-k[0], -k[1]))
                rem[k] = new
            else:
                rem.pop(k, None)
    return LaurentPoly(quotient).shift(sx - dx, sy - dy)


def format_poly(p: LaurentPoly, var_t: str = "t") -> str:
    """Human-readable rendering, terms in descending lexicographic order."""
    if p.is_zero():
        return "0"
    parts = []
    for i, j in sorted(p.terms, reverse=True):
        coeff = p.terms[(i, j)]
        mono = "*".join(
            s for s in (_power("x", i), _power("y", j)) if s
        )
        cstr = format_tpoly(coeff, var_t)
        if not mono:
            body = cstr
        elif cstr == "1":
            body = mono
        elif cstr == "-1":
            body = "-" + mono
        elif len(coeff.coeffs) == 1 or cstr.count(" ") == 0:
            body = f"{cstr}*{mono}"
        else:
            body = f"({cstr})*{mono}"
        parts.append(body)
    out = parts[0]
    for body in parts[1:]:
        out += f" - {body[1:]}" if body.startswith("-") else f" + {body}"
    return out


def _power(var: str, n: int) -> str:
    if n == 0:
        return ""
    if n == 1:
        return var
    return f"{var}^{n}"
