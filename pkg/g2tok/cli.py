"""CLI for g2tok - exact verification of the G2 Tokuyama-type identity.

Default: text output on stdout, progress on stderr
--format: Output format (json, csv, latex, text)
Exit codes: 0 success, 1 identity mismatch or failed table check, 2 usage error
"""

from pathlib import Path

import typer
from pydantic import BaseModel, ValidationError
from rich.console import Console

from g2tok.core.config import get_threads
from g2tok.core.output import OutputFormat, format_output
from g2tok.core.poly import format_poly
from g2tok.g2.identity import lhs_parts, rhs_formula, verify, verify_grid, weyl_table
from g2tok.g2.patterns import format_pattern, iter_patterns
from g2tok.g2.roots import WeightParams, weyl_dimension
from g2tok.schemas import SCHEMAS, Params, PatternList, PolyReport, RunConfig, terms_of

app = typer.Typer(
    help="Exact verification of the G2 Tokuyama-type identity. Non-interactive.",
    no_args_is_help=True,
)
console = Console(stderr=True)

FormatOption = typer.Option(
    OutputFormat.TEXT,
    "-f",
    "--format",
    help="Output format: json, csv, latex, text",
)
OutputOption = typer.Option(None, "-o", "--output", help="Output file (default: stdout)")
L1Option = typer.Option(..., "--l1", help="Coefficient of varpi_1")
L2Option = typer.Option(..., "--l2", help="Coefficient of varpi_2")


def _output(result: BaseModel, output: Path | None, fmt: OutputFormat) -> None:
    """Output result in specified format."""
    data = format_output(result, fmt)
    if output:
        output.write_text(data)
        console.print(f"[dim]Saved to {output}[/dim]")
    else:
        print(data)


def _config(**fields) -> RunConfig:
    """Validate the invocation; pydantic errors become usage errors (exit 2)."""
    try:
        return RunConfig(**fields)
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        raise typer.BadParameter(messages) from None


def _params(w: WeightParams) -> Params:
    return Params(l1=w.l1, l2=w.l2)


def _verify(cfg: RunConfig) -> tuple[int, BaseModel]:
    if cfg.grid is not None:
        console.print(f"[dim]Verifying grid 1..{cfg.grid} with {cfg.threads} worker(s)...[/dim]")
        grid = verify_grid(cfg.grid, threads=cfg.threads, q_value=cfg.q_value)
        return (0 if grid.all_equal and grid.spot_agree else 1), grid
    console.print(f"[dim]Verifying l1={cfg.l1}, l2={cfg.l2}...[/dim]")
    report = verify(WeightParams(cfg.l1, cfg.l2), threads=cfg.threads, q_value=cfg.q_value)
    return (0 if report.equal and report.spot_agree else 1), report


def _patterns(cfg: RunConfig) -> PatternList:
    w = WeightParams(cfg.l1, cfg.l2)
    listed = []
    total = 0
    for p in iter_patterns(w):
        total += 1
        if not cfg.count_only:
            listed.append(format_pattern(p, w if cfg.verbose else None))
    return PatternList(
        params=_params(w), count=total, weyl_dimension=weyl_dimension(w), patterns=listed
    )


def _side(cfg: RunConfig) -> PolyReport:
    w = WeightParams(cfg.l1, cfg.l2)
    if cfg.command == "rhs":
        side, poly = "rhs", rhs_formula(w)
    else:
        parts = lhs_parts(w, threads=cfg.threads)
        side = f"lhs ({cfg.part})"
        poly = {"std": parts.std, "adj": parts.adj, "all": parts.total}[cfg.part]
    return PolyReport(params=_params(w), side=side, terms=terms_of(poly), text=format_poly(poly))


def _table(cfg: RunConfig) -> BaseModel:
    from g2tok.symbolic.tables import adj_table, final_table, std_table, table_model

    if cfg.which == "1":
        return table_model("Weyl side", weyl_table())
    builders = {
        "2": ("standard terms", std_table),
        "3": ("adjusted terms", adj_table),
        "final": ("standard plus adjusted", final_table),
    }
    name, build = builders[cfg.which]
    console.print("[dim]Running the symbolic summation...[/dim]")
    return table_model(name, build(*cfg.parity), cfg.parity)


def _errata() -> tuple[int, BaseModel]:
    from g2tok.symbolic.errata import compare_tables

    console.print("[dim]Running the symbolic summation...[/dim]")
    report = compare_tables()
    if report.hard_failures:
        console.print(f"[red]Failed: {', '.join(report.hard_failures)}[/red]")
        return 1, report
    return 0, report


def run(cfg: RunConfig) -> tuple[int, BaseModel]:
    """Execute one validated invocation; returns the exit code and the report."""
    match cfg.command:
        case "verify":
            return _verify(cfg)
        case "patterns":
            return 0, _patterns(cfg)
        case "lhs" | "rhs":
            return 0, _side(cfg)
        case "tables":
            return 0, _table(cfg)
        case "errata":
            return _errata()
    raise ValueError(f"unknown command: {cfg.command}")


def _emit(cfg: RunConfig, output: Path | None) -> None:
    code, report = run(cfg)
    _output(report, output, cfg.output_format)
    if code:
        raise typer.Exit(code)


@app.command("verify")
def cmd_verify(
    l1: int = typer.Option(None, "--l1", help="Coefficient of varpi_1 in theta + rho"),
    l2: int = typer.Option(None, "--l2", help="Coefficient of varpi_2 in theta + rho"),
    grid: int = typer.Option(None, "--grid", help="Verify every 1 <= l1, l2 <= N"),
    q: str = typer.Option(None, "--q", help="Exact rational q for the spot check (t = 1/q)"),
    threads: int = typer.Option(None, "--threads", help="Worker processes (G2TOK_THREADS)"),
    output: Path = OutputOption,
    fmt: OutputFormat = FormatOption,
) -> None:
    """Compare both sides of the identity exactly.

    Example: g2tok verify --l1 2 --l2 3
    Example: g2tok verify --grid 6 -f json
    """
    cfg = _config(
        command="verify",
        l1=l1,
        l2=l2,
        grid=grid,
        q_value=q,
        threads=threads or get_threads(),
        output_format=fmt,
    )
    _emit(cfg, output)


@app.command("patterns")
def cmd_patterns(
    l1: int = L1Option,
    l2: int = L2Option,
    verbose: bool = typer.Option(False, "-v", "--verbose", help="Mark circled and boxed entries"),
    count: bool = typer.Option(False, "--count", help="Only count the patterns"),
    output: Path = OutputOption,
    fmt: OutputFormat = FormatOption,
) -> None:
    """List or count the Littelmann patterns of B(theta + rho).

    Example: g2tok patterns --l1 1 --l2 1 --verbose
    """
    cfg = _config(
        command="patterns", l1=l1, l2=l2, verbose=verbose, count_only=count, output_format=fmt
    )
    _emit(cfg, output)


@app.command("lhs")
def cmd_lhs(
    l1: int = L1Option,
    l2: int = L2Option,
    part: str = typer.Option("all", "--part", help="Which part: std, adj or all"),
    output: Path = OutputOption,
    fmt: OutputFormat = FormatOption,
) -> None:
    """Emit the pattern sum as a Laurent polynomial.

    Example: g2tok lhs --l1 1 --l2 2 --part adj
    """
    cfg = _config(
        command="lhs", l1=l1, l2=l2, part=part, threads=get_threads(), output_format=fmt
    )
    _emit(cfg, output)


@app.command("rhs")
def cmd_rhs(
    l1: int = L1Option,
    l2: int = L2Option,
    output: Path = OutputOption,
    fmt: OutputFormat = FormatOption,
) -> None:
    """Emit the Weyl-side polynomial D(x) * character.

    Example: g2tok rhs --l1 1 --l2 1
    """
    _emit(_config(command="rhs", l1=l1, l2=l2, output_format=fmt), output)


@app.command("tables")
def cmd_tables(
    which: str = typer.Option(
        "1", "--which", help="1 (Weyl side), 2 (standard), 3 (adjusted) or final"
    ),
    eps1: int = typer.Option(0, "--eps1", help="Parity of l1"),
    eps2: int = typer.Option(0, "--eps2", help="Parity of l2"),
    output: Path = OutputOption,
    fmt: OutputFormat = FormatOption,
) -> None:
    """Emit a multi-degree table.

    Example: g2tok tables --which 2 --eps1 1 -f csv
    """
    _emit(_config(command="tables", which=which, parity=(eps1, eps2), output_format=fmt), output)


@app.command("errata")
def cmd_errata(
    output: Path = OutputOption,
    fmt: OutputFormat = FormatOption,
) -> None:
    """Compare computed tables with the published ones; exit 1 on a failed hard check.

    Example: g2tok errata -f json
    """
    _emit(_config(command="errata", output_format=fmt), output)


@app.command("schemas")
def cmd_schemas(
    name: str = typer.Argument(None, help="Schema name to show details"),
) -> None:
    """List or inspect report schemas."""
    if name:
        schema = SCHEMAS.get(name)
        if not schema:
            available = ", ".join(SCHEMAS.keys())
            raise typer.BadParameter(f"Schema not found: {name}. Available: {available}")
        console.print(f"[bold]{schema.__name__}[/bold]")
        console.print(schema.model_json_schema())
    else:
        console.print("[bold]Available schemas:[/bold]")
        for n, s in SCHEMAS.items():
            console.print(f"  [cyan]{n}[/cyan] - {s.__name__}")
