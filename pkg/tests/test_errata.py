"""Comparison of the computed tables with the published ones."""

from g2tok.core.multidegree import MultiDegreeTable, degree
from g2tok.g2.identity import weyl_table
from g2tok.schemas.tables import CountCheck, ErrataEntry, ErrataReport
from g2tok.symbolic.errata import (
    SIGN_DIFFERS,
    compare_rows,
    compare_tables,
    count_checks,
    rule_errata,
    sign_convention_degrees,
    unexpected_disagreements,
)
from g2tok.symbolic.printed import PRINTED_ADJ, PRINTED_STD, PRINTED_WEYL, Part, PrintedRow
from g2tok.symbolic.tables import std_table

FLIPPED = {
    "((1,0),(3,1))",
    "((3,1),(3,1))",
    "((3,1),(6,3))",
    "((4,2),(6,3))",
    "((3,2),(3,3))",
    "((3,2),(6,4))",
    "((4,2),(6,4))",
}


def _by_degree(entries: list[ErrataEntry]) -> dict[str, ErrataEntry]:
    return {e.degree: e for e in entries}


def test_weyl_side_sign_convention_rows():
    weyl = compare_rows("1", PRINTED_WEYL, weyl_table())
    entries = _by_degree(weyl)
    assert len(entries) == 12
    assert sign_convention_degrees(weyl) == FLIPPED
    assert {d for d, e in entries.items() if not e.agrees} == FLIPPED
    assert all(e.note == SIGN_DIFFERS for d, e in entries.items() if d in FLIPPED)
    assert entries["((0,0),(0,0))"].agrees


def test_standard_rows_repeating_the_flip_are_explained():
    weyl = compare_rows("1", PRINTED_WEYL, weyl_table())
    std = [e for e in compare_rows("2", PRINTED_STD, std_table()) if e.degree in FLIPPED]
    assert len(std) == 7
    assert all(e.note == SIGN_DIFFERS for e in std)
    assert unexpected_disagreements(weyl + std) == 0


def test_power_variant_is_reported():
    row = next(r for r in PRINTED_ADJ if r.degree == degree(1, 1, 4, 3))
    other = PrintedRow(row.degree, (Part(-1, "T2", 2),))
    computed = MultiDegreeTable({row.degree: other.value()})
    entry = _by_degree(compare_rows("3", (row,), computed))["((1,1),(4,3))"]
    assert not entry.agrees
    assert entry.note == "computation supports -q^-1 x^2y T2(x)"


def test_zero_and_absent_rows():
    row = PRINTED_WEYL[0]
    extra = degree(9, 9, 9, 9)
    computed = MultiDegreeTable({extra: row.value()})
    entries = _by_degree(compare_rows("1", (row,), computed))
    assert entries["((1,0),(0,0))"].note == "computed coefficient is zero"
    assert entries["((9,9),(9,9))"].printed == "(absent)"


def test_unexpected_disagreements():
    entries = [
        ErrataEntry(table="1", degree="((4,2),(6,4))", printed="", computed="", agrees=False),
        ErrataEntry(table="2", degree="((4,2),(4,2))", printed="", computed="", agrees=False),
        ErrataEntry(table="3", degree="((1,0),(0,0))", printed="", computed="", agrees=False),
    ]
    assert unexpected_disagreements(entries) == 1


def test_hard_failures():
    report = ErrataReport(
        counts=[
            CountCheck(name="hard", expected=1, actual=2, hard=True),
            CountCheck(name="soft", expected=1, actual=2, hard=False),
        ],
        checks={"good": True, "bad": False},
    )
    assert report.hard_failures == ["bad", "hard"]


def test_full_comparison_passes_the_hard_checks():
    report = compare_tables()
    assert report.hard_failures == []
    assert all(report.checks.values())
    assert {e.table for e in report.entries} == {"1", "2", "3", "H_adj"}


def test_r8_payoff_is_reported_as_an_erratum():
    (entry,) = rule_errata()
    assert entry.table == "H_adj"
    assert entry.degree.startswith("r8 ")
    assert not entry.agrees
    assert entry.printed != entry.computed


def test_raw_degree_counts_are_hard_and_hold():
    checks = {c.name: c for c in count_checks()}
    for name, expected in (
        ("standard raw degrees", 33),
        ("adjusted raw degrees", 14),
        ("raw degree union", 35),
    ):
        assert checks[name].hard
        assert checks[name].expected == checks[name].actual == expected
    assert not checks["standard raw terms"].hard
