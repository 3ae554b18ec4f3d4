"""Decorated weights: h(u), H_std, and the consolidated bad-middle adjustment H_adj."""

from dataclasses import dataclass

from g2tok.core.poly import ONE_MINUS_T, T, T_ONE, T_ZERO, TPoly
from g2tok.g2.patterns import (
    ENTRIES,
    Decoration,
    EntryStatus,
    Pattern,
    decorations,
    has_bad_middle,
)
from g2tok.g2.roots import WeightParams

P, C, B = EntryStatus.PLAIN, EntryStatus.CIRCLED, EntryStatus.BOXED

_H = {
    EntryStatus.PLAIN: ONE_MINUS_T,
    EntryStatus.BOXED: -T,
    EntryStatus.CIRCLED: T_ONE,
    EntryStatus.BOTH: T_ZERO,
}


def h(s: EntryStatus) -> TPoly:
    return _H[s]


StatusSet = frozenset[EntryStatus]
Case = tuple[StatusSet, StatusSet, StatusSet | None]


@dataclass(frozen=True)
class AdjRule:
    """One row of the H_adj(pi') table.

    `cases` lists (e, d, a) status sets; a is None for "any decoration".
    `on_line` pins a == 2d + 1 - e (True), a != 2d + 1 - e (False) or neither (None).
    `printed` holds the published payoff when it differs from the one the identity needs.
    """

    name: str
    label: str
    cases: tuple[Case, ...]
    on_line: bool | None
    payoff: TPoly
    printed: TPoly | None = None

    def matches(self, se: EntryStatus, sd: EntryStatus, sa: EntryStatus, on_line: bool) -> bool:
        if self.on_line is not None and self.on_line != on_line:
            return False
        return any(
            se in e and sd in d and (a is None or sa in a) for e, d, a in self.cases
        )


def _s(*statuses: EntryStatus) -> StatusSet:
    return frozenset(statuses)


ADJ_RULES: tuple[AdjRule, ...] = (
    AdjRule("r1", "(e°, d°, a°)", ((_s(C), _s(C), _s(C)),), None, ONE_MINUS_T * T),
    AdjRule(
        "r2", "(e°, d or d°, [a])", ((_s(C), _s(P, C), _s(B)),), None, -(ONE_MINUS_T * T**2)
    ),
    AdjRule(
        "r3", "(e or e°, [d], a = 2d+1-e)", ((_s(P, C), _s(B), None),), True, ONE_MINUS_T * T**3
    ),
    AdjRule(
        "r4",
        "(e, d°, a°), (e°, d°, a), (e°, d, a°), (e, d°, a), (e, d, a°)",
        (
            (_s(P), _s(C), _s(C)),
            (_s(C), _s(C), _s(P)),
            (_s(C), _s(P), _s(C)),
            (_s(P), _s(C), _s(P)),
            (_s(P), _s(P), _s(C)),
        ),
        None,
        ONE_MINUS_T**2 * T,
    ),
    AdjRule(
        "r5",
        "(e or e°, [d], a), a != 2d+1-e",
        ((_s(P, C), _s(B), _s(P)),),
        False,
        -(ONE_MINUS_T**2 * T**2),
    ),
    AdjRule("r6", "(e, d, a)", ((_s(P), _s(P), _s(P)),), None, ONE_MINUS_T**3 * T),
    AdjRule(
        "r7", "(e°, d, a), a != 2d+1-e", ((_s(C), _s(P), _s(P)),), False, ONE_MINUS_T**3 * T
    ),
    AdjRule(
        "r8",
        "(e°, d, a = 2d+1-e)",
        ((_s(C), _s(P), None),),
        True,
        ONE_MINUS_T * T * (ONE_MINUS_T**2 + T),
        printed=ONE_MINUS_T * T * (ONE_MINUS_T**2 - T),
    ),
)


def find_adj_rule(
    se: EntryStatus, sd: EntryStatus, sa: EntryStatus, on_line: bool
) -> AdjRule | None:
    """First matching row in table order, or None (H_adj(pi') = 0)."""
    for rule in ADJ_RULES:
        if rule.matches(se, sd, sa, on_line):
            return rule
    return None


def adj_payoff(se: EntryStatus, sd: EntryStatus, sa: EntryStatus, on_line: bool) -> TPoly:
    rule = find_adj_rule(se, sd, sa, on_line)
    return rule.payoff if rule else T_ZERO


def H_std(p: Pattern, w: WeightParams, dec: Decoration | None = None) -> TPoly:
    dec = dec or decorations(p, w)
    out = T_ONE
    for entry in ENTRIES:
        out = out * h(dec.status(entry))
        if not out:
            break
    return out


def adj_rule_for(p: Pattern, w: WeightParams, dec: Decoration | None = None) -> AdjRule | None:
    if not has_bad_middle(p):
        return None
    dec = dec or decorations(p, w)
    on_line = p.a == 2 * p.d + 1 - p.e
    return find_adj_rule(dec.status("e"), dec.status("d"), dec.status("a"), on_line)


def H_adj(p: Pattern, w: WeightParams, dec: Decoration | None = None) -> TPoly:
    """H_adj(pi') * h(f) for bad-middle patterns, else 0."""
    if not has_bad_middle(p):
        return T_ZERO
    dec = dec or decorations(p, w)
    rule = adj_rule_for(p, w, dec)
    if rule is None:
        return T_ZERO
    return rule.payoff * h(dec.status("f"))


def H_hat(p: Pattern, w: WeightParams) -> TPoly:
    dec = decorations(p, w)
    return H_std(p, w, dec) + H_adj(p, w, dec)
