"""The pattern sums with l1 and l2 left symbolic.

The standard part sums h(u) over all six entries in the order f, a, b, c, d, e.
The adjusted part only runs over bad-middle patterns (b = d + 1, c = 2d + 1), so
its free entries are e, d, a, f and no parity gate ever appears.
"""

from functools import cache

from g2tok.g2.patterns import EntryStatus
from g2tok.g2.weights import adj_payoff
from g2tok.symbolic.forms import AffineForm, form
from g2tok.symbolic.sums import plain_sum, sum_b_entry, sum_entry, weighted_sum
from g2tok.symbolic.terms import SymSum

P, C, B = EntryStatus.PLAIN, EntryStatus.CIRCLED, EntryStatus.BOXED

# (entry, lower, upper) innermost first; for b the lower column holds c, the bound being ceil(c/2)
STD_STEPS: tuple[tuple[str, AffineForm, AffineForm], ...] = (
    ("f", form(), form(l2=1, a=1, b=-2, c=1, d=-2, e=1)),
    ("a", form(b=1), form(l1=1, b=3, c=-2, d=3, e=-2)),
    ("b", form(c=1), form(l2=1, c=1, d=-2, e=1)),
    ("c", form(d=2), form(l1=1, d=3, e=-2)),
    ("d", form(e=1), form(l2=1, e=1)),
    ("e", form(), form(l1=1)),
)


@cache
def std_symbolic(merge: bool = True) -> SymSum:
    """sum H_std(pi) x^(a+c+e) y^(b+d+f) as a finite sum of gated terms in l1, l2.

    With merge=False like terms are never combined, so every term each step
    produces is kept; the raw term and multi-degree counts are read from that.
    """
    s = SymSum.monomial(form(a=1, c=1, e=1), form(b=1, d=1, f=1), merge=merge)
    for entry, lower, upper in STD_STEPS:
        if entry == "b":
            s = sum_b_entry(s, upper)
        else:
            s = sum_entry(s, entry, lower, upper)
    return s


def _endpoint_sum(
    interior: SymSum, at_lower: SymSum, at_upper: SymSum, var: str, lower, upper
) -> SymSum:
    """Plain sum of `interior`, with the values at both bounds replaced."""
    out = plain_sum(interior, var, lower, upper)
    out = out + (at_lower - interior).substitute(var, lower)
    return out + (at_upper - interior).substitute(var, upper)


@cache
def adj_symbolic(merge: bool = True) -> SymSum:
    """sum H_adj(pi') h(f) x^(a+c+e) y^(b+d+f) over bad-middle patterns.

    For e < l1 the lower end of a (d + 1) is circled, the upper end
    (l1 + 2d + 1 - 2e) is boxed, and the line a = 2d + 1 - e lies strictly inside
    the range unless d = e, where it is the lower end. A boxed e admits no rule,
    so the e = l1 slice is removed.
    """
    base = SymSum.monomial(form(1, a=1, d=2, e=1), form(1, d=2, f=1), merge=merge)
    inner = sum_entry(base, "f", form(), form(-1, l2=1, a=1, d=-2, e=1))
    a_low, a_high, line = form(1, d=1), form(1, l1=1, d=2, e=-2), form(1, d=2, e=-1)
    by_e: dict[EntryStatus, SymSum] = {}
    for se in (C, P):
        by_d: dict[EntryStatus, SymSum] = {}
        for sd in (C, P, B):
            points = [] if sd is C else [(line, adj_payoff(se, sd, P, True))]
            by_d[sd] = weighted_sum(
                inner,
                "a",
                a_low,
                a_high,
                interior=adj_payoff(se, sd, P, False),
                at_lower=adj_payoff(se, sd, C, sd is C),
                at_upper=adj_payoff(se, sd, B, False),
                points=points,
            )
        by_e[se] = _endpoint_sum(by_d[P], by_d[C], by_d[B], "d", form(e=1), form(l2=1, e=1))
    return _endpoint_sum(by_e[P], by_e[C], SymSum(merge=merge), "e", form(), form(l1=1))
