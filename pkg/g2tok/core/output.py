"""Output formatting for CLI.

Supports: json, csv, latex, text
"""

import csv
from enum import Enum
from io import StringIO

from pydantic import BaseModel
from rich.console import Console
from rich.table import Table


class OutputFormat(str, Enum):
    """Supported output formats."""

    JSON = "json"
    CSV = "csv"
    LATEX = "latex"
    TEXT = "text"


def format_output(result: BaseModel, fmt: OutputFormat) -> str:
    """Format a report model for output.

    Args:
        result: Pydantic model instance
        fmt: Output format

    Returns:
        Formatted string
    """
    if fmt == OutputFormat.JSON:
        return result.model_dump_json(indent=2)

    if fmt == OutputFormat.CSV:
        return _to_csv(result)

    if fmt == OutputFormat.LATEX:
        return _to_latex(result)

    if fmt == OutputFormat.TEXT:
        return _to_text(result)

    return result.model_dump_json(indent=2)


def _rows(result: BaseModel) -> tuple[list[str], list[list[str]]]:
    """Header and body rows for the tabular formats."""
    data = result.model_dump()
    if "rows" in data:
        header = ["m1", "n1", "m2", "n2", "coefficient"]
        return header, [[r[k] for k in header] for r in data["rows"]]
    if "entries" in data:
        header = ["table", "degree", "printed", "computed", "agrees", "note"]
        return header, [[str(e[k]) for k in header] for e in data["entries"]]
    if "cells" in data:
        header = ["l1", "l2", "equal", "pattern_count", "lhs_terms", "spot_agree"]
        return header, [[str(c[k]) for k in header] for c in data["cells"]]
    if "lhs" in data:
        header = ["side", "ex", "ey", "t"]
        body = []
        for side in ("lhs", "rhs", "diff"):
            for term in data[side]:
                t = " ".join(str(v) for v in term["t"])
                body.append([side, str(term["ex"]), str(term["ey"]), t])
        return header, body
    if "terms" in data:
        header = ["ex", "ey", "t"]
        body = [
            [str(t["ex"]), str(t["ey"]), " ".join(str(v) for v in t["t"])] for t in data["terms"]
        ]
        return header, body
    if "patterns" in data:
        return ["a b c d e f"], [[p] for p in data["patterns"]]
    header = ["field", "value"]
    return header, [[k, str(v)] for k, v in data.items()]


def _to_csv(result: BaseModel) -> str:
    header, body = _rows(result)
    buf = StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(body)
    return buf.getvalue()


def _latex_cell(text: str) -> str:
    return text.replace("*", " ").replace("_", r"\_")


def _to_latex(result: BaseModel) -> str:
    """Multi-degree tables become `((m1,n1),(m2,n2)) & coefficient \\\\` rows."""
    data = result.model_dump()
    if "rows" not in data:
        header, body = _rows(result)
        lines = [" & ".join(header) + r" \\", r"\hline"]
        lines += [" & ".join(_latex_cell(c) for c in row) + r" \\" for row in body]
        return _tabular(len(header), lines)
    lines = [r"multi-degree & coefficient \\", r"\hline"]
    for r in data["rows"]:
        coeff = _latex_cell(r["identified"] or r["coefficient"])
        lines.append(f"{_degree_label(r)} & ${coeff}$ \\\\")
    return _tabular(2, lines)


def _degree_label(row: dict) -> str:
    return f"(({row['m1']},{row['n1']}),({row['m2']},{row['n2']}))"


def _tabular(ncols: int, lines: list[str]) -> str:
    cols = "l" * ncols
    return "\n".join([f"\\begin{{tabular}}{{{cols}}}", *lines, r"\end{tabular}"]) + "\n"


def _to_text(result: BaseModel) -> str:
    """Convert to Rich table format (string representation)."""
    console = Console(
        file=StringIO(), force_terminal=False, width=160, markup=False, highlight=False
    )
    data = result.model_dump()
    title = data.get("name") or result.__class__.__name__

    if "lhs" in data:
        _print_report(console, data)
    elif data.get("text"):
        console.print(f"{title}: {data['side']}")
        console.print(data["text"])
    else:
        header, body = _rows(result)
        if "rows" in data:
            header = ["multi-degree", "coefficient"]
            body = [[_degree_label(r), r["identified"] or r["coefficient"]] for r in data["rows"]]
        table = Table(title=title, show_header=True, header_style="bold")
        for col in header:
            table.add_column(col)
        for row in body:
            table.add_row(*row)
        console.print(table)
        for name, ok in data.get("checks", {}).items():
            console.print(f"{'ok  ' if ok else 'FAIL'} {name}")
        for count in data.get("counts", []):
            kind = "hard" if count["hard"] else "soft"
            mark = "ok  " if count["expected"] == count["actual"] else "DIFF"
            console.print(
                f"{mark} {count['name']}: {count['actual']} (expected {count['expected']}, {kind})"
            )
    return console.file.getvalue()


def _print_report(console: Console, data: dict) -> None:
    params = data["params"]
    table = Table(title=f"l1={params['l1']}, l2={params['l2']}", show_header=True)
    table.add_column("Field", style="cyan")
    table.add_column("Value")
    table.add_row("equal", str(data["equal"]))
    table.add_row("pattern count", str(data["pattern_count"]))
    table.add_row("lhs terms", str(len(data["lhs"])))
    table.add_row("rhs terms", str(len(data["rhs"])))
    table.add_row("diff terms", str(len(data["diff"])))
    table.add_row("spot check", f"{data['spot_agree']} ({data['spot_points']} points)")
    console.print(table)
    if data["adj_rule_histogram"]:
        hist = Table(title="H_adj rules", show_header=True)
        hist.add_column("rule")
        hist.add_column("patterns", justify="right")
        for name, n in data["adj_rule_histogram"].items():
            hist.add_row(name, str(n))
        console.print(hist)
