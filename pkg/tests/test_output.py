"""Tests for the output formatters."""

import json

from g2tok.core.output import OutputFormat, format_output
from g2tok.g2.identity import verify, weyl_table
from g2tok.g2.roots import WeightParams
from g2tok.schemas import Params, PatternList
from g2tok.symbolic.tables import table_model


def _table():
    return table_model("Weyl side", weyl_table())


def test_json_round_trips_through_the_schema():
    data = json.loads(format_output(_table(), OutputFormat.JSON))
    assert data["name"] == "Weyl side"
    assert len(data["rows"]) == 12


def test_csv_table():
    lines = format_output(_table(), OutputFormat.CSV).strip().splitlines()
    assert lines[0] == "m1,n1,m2,n2,coefficient"
    assert len(lines) == 13


def test_latex_table():
    out = format_output(_table(), OutputFormat.LATEX)
    assert out.startswith(r"\begin{tabular}{ll}")
    assert r"((4,2),(6,4)) & $T(x)$ \\" in out
    assert out.rstrip().endswith(r"\end{tabular}")


def test_text_report():
    report = verify(WeightParams(1, 1), spot_points=1)
    out = format_output(report, OutputFormat.TEXT)
    assert "l1=1, l2=1" in out
    assert "pattern count" in out
    assert "H_adj rules" in out


def test_pattern_list_csv():
    model = PatternList(
        params=Params(l1=1, l2=1),
        count=2,
        weyl_dimension=64,
        patterns=["0 0 0 0 0 0", "1 0 0 0 0 0"],
    )
    lines = format_output(model, OutputFormat.CSV).splitlines()
    assert lines == ["a b c d e f", "0 0 0 0 0 0", "1 0 0 0 0 0"]
