"""Schema registry: the pydantic models exchanged by the CLI and the library."""

from g2tok.schemas.report import (
    CellSummary,
    GridReport,
    Params,
    PatternList,
    PolyReport,
    PolyTerm,
    VerificationReport,
    poly_of,
    terms_of,
)
from g2tok.schemas.run import RunConfig
from g2tok.schemas.tables import CountCheck, ErrataEntry, ErrataReport, TableModel, TableRow

SCHEMAS: dict[str, type] = {
    "verification": VerificationReport,
    "grid": GridReport,
    "poly": PolyReport,
    "patterns": PatternList,
    "table": TableModel,
    "errata": ErrataReport,
}

__all__ = [
    "PolyTerm",
    "Params",
    "VerificationReport",
    "CellSummary",
    "GridReport",
    "PolyReport",
    "PatternList",
    "TableRow",
    "TableModel",
    "ErrataEntry",
    "CountCheck",
    "ErrataReport",
    "RunConfig",
    "terms_of",
    "poly_of",
    "SCHEMAS",
]
