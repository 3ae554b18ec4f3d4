"""G2 root system in the simple-root basis, its Weyl group, and weight monomials.

alpha_2 is the long root. The Cartan matrix C = [[2, -1], [-3, 2]] gives the
pairings <alpha_j, alpha_i^vee> = C[j][i].
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

CARTAN: tuple[tuple[int, int], tuple[int, int]] = ((2, -1), (-3, 2))

Matrix = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True, order=True)
class RootVec:
    """m1 * alpha_1 + m2 * alpha_2."""

    m1: int
    m2: int

    def __add__(self, other: "RootVec") -> "RootVec":
        return RootVec(self.m1 + other.m1, self.m2 + other.m2)

    def __sub__(self, other: "RootVec") -> "RootVec":
        return RootVec(self.m1 - other.m1, self.m2 - other.m2)

    def __neg__(self) -> "RootVec":
        return RootVec(-self.m1, -self.m2)

    def __mul__(self, k: int) -> "RootVec":
        return RootVec(k * self.m1, k * self.m2)

    __rmul__ = __mul__


@dataclass(frozen=True)
class WeightParams:
    """theta + rho = l1 * varpi_1 + l2 * varpi_2."""

    l1: int
    l2: int

    def __post_init__(self):
        if self.l1 < 1 or self.l2 < 1:
            raise ValueError(f"l1 and l2 must be positive, got ({self.l1}, {self.l2})")


@dataclass(frozen=True)
class WeylElt:
    """A Weyl group element as an integer matrix on root coordinates (columns = images)."""

    matrix: Matrix
    length: int

    @property
    def sign(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def apply(self, v: RootVec) -> RootVec:
        (a, b), (c, d) = self.matrix
        return RootVec(a * v.m1 + b * v.m2, c * v.m1 + d * v.m2)


ALPHA1 = RootVec(1, 0)
ALPHA2 = RootVec(0, 1)


def _matmul(p: Matrix, q: Matrix) -> Matrix:
    return tuple(
        tuple(sum(p[r][k] * q[k][c] for k in range(2)) for c in range(2)) for r in range(2)
    )


def coroot_pairing(v: RootVec, i: int) -> int:
    """<v, alpha_i^vee> for i in {1, 2}."""
    return v.m1 * CARTAN[0][i - 1] + v.m2 * CARTAN[1][i - 1]


def simple_reflection(i: int) -> Matrix:
    """s_i(v) = v - <v, alpha_i^vee> alpha_i, as a matrix."""
    alpha = ALPHA1 if i == 1 else ALPHA2
    cols = []
    for basis in (ALPHA1, ALPHA2):
        image = basis - alpha * coroot_pairing(basis, i)
        cols.append(image)
    return ((cols[0].m1, cols[1].m1), (cols[0].m2, cols[1].m2))


def positive_roots() -> tuple[RootVec, ...]:
    """The six positive roots, generated by reflecting the simple roots."""
    return _positive_roots()


@cache
def _positive_roots() -> tuple[RootVec, ...]:
    found: set[RootVec] = set()
    for w in generate_weyl_group():
        for alpha in (ALPHA1, ALPHA2):
            v = w.apply(alpha)
            if v.m1 >= 0 and v.m2 >= 0:
                found.add(v)
    return tuple(sorted(found, key=lambda r: (r.m1 + r.m2, r.m2)))


def generate_weyl_group() -> tuple[WeylElt, ...]:
    return _weyl_group()


@cache
def _weyl_group() -> tuple[WeylElt, ...]:
    """Breadth-first closure of {s1, s2}; BFS depth is the length."""
    gens = (simple_reflection(1), simple_reflection(2))
    identity: Matrix = ((1, 0), (0, 1))
    seen: dict[Matrix, WeylElt] = {identity: WeylElt(identity, 0)}
    queue = deque([identity])
    while queue:
        m = queue.popleft()
        elt = seen[m]
        for g in gens:
            nxt = _matmul(g, m)
            if nxt not in seen:
                seen[nxt] = WeylElt(nxt, elt.length + 1)
                queue.append(nxt)
    return tuple(seen.values())


def long_element() -> WeylElt:
    """The unique element sending every positive root to a negative root."""
    candidates = [
        w
        for w in generate_weyl_group()
        if all(w.apply(r).m1 <= 0 and w.apply(r).m2 <= 0 for r in _simple_positive())
    ]
    if len(candidates) != 1:
        raise RuntimeError(f"expected one long element, found {len(candidates)}")
    return candidates[0]


def _simple_positive() -> tuple[RootVec, ...]:
    return (ALPHA1, ALPHA2)


def inversion_count(w: WeylElt) -> int:
    """Number of positive roots sent to negative roots."""
    return sum(1 for r in positive_roots() if w.apply(r).m1 < 0 or w.apply(r).m2 < 0)


def fundamental_weights() -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    """Solve <varpi_i, alpha_j^vee> = delta_ij in root coordinates."""
    # varpi = (u, v) with u*C[0][j] + v*C[1][j] = delta
    (a, b), (c, d) = CARTAN
    det = Fraction(a * d - b * c)
    out = []
    for i in (1, 2):
        r1, r2 = (1, 0) if i == 1 else (0, 1)
        # u*a + v*c = r1 ; u*b + v*d = r2
        u = (r1 * d - c * r2) / det
        v = (a * r2 - b * r1) / det
        out.append((u, v))
    return out[0], out[1]


def _integral_weight(pair: tuple[Fraction, Fraction]) -> RootVec:
    u, v = pair
    if u.denominator != 1 or v.denominator != 1:
        raise ValueError(f"weight {pair} is not in the root lattice")
    return RootVec(int(u), int(v))


VARPI1, VARPI2 = (_integral_weight(p) for p in fundamental_weights())


def rho() -> RootVec:
    total = RootVec(0, 0)
    for r in positive_roots():
        total = total + r
    return RootVec(total.m1 // 2, total.m2 // 2)


def theta_plus_rho(p: WeightParams) -> RootVec:
    return VARPI1 * p.l1 + VARPI2 * p.l2


def monomial_of(v: RootVec) -> tuple[int, int]:
    """x^{m1 alpha_1 + m2 alpha_2} = x^m1 y^m2."""
    return (v.m1, v.m2)


def weyl_dimension(p: WeightParams) -> int:
    """dim of the irreducible module with highest weight l1*varpi_1 + l2*varpi_2."""
    lam = theta_plus_rho(p) + rho()
    num = Fraction(1)
    for r in positive_roots():
        num *= Fraction(_pair(lam, r), _pair(rho(), r))
    return int(num)


def _pair(v: RootVec, root: RootVec) -> Fraction:
    """<v, root^vee> via the invariant form with (alpha_1, alpha_1) = 2, (alpha_2, alpha_2) = 6."""
    gram = ((2, -3), (-3, 6))

    def form(p: RootVec, q: RootVec) -> int:
        return (
            p.m1 * q.m1 * gram[0][0]
            + p.m1 * q.m2 * gram[0][1]
            + p.m2 * q.m1 * gram[1][0]
            + p.m2 * q.m2 * gram[1][1]
        )

    return Fraction(2 * form(v, root), form(root, root))
