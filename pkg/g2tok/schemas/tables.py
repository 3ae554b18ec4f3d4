"""Multi-degree table and errata schemas."""

from pydantic import BaseModel, Field


class TableRow(BaseModel):
    m1: str
    n1: str
    m2: str
    n2: str
    coefficient: str
    identified: str | None = None


class TableModel(BaseModel):
    name: str
    parity: tuple[int, int] | None = None
    rows: list[TableRow] = Field(default_factory=list)


class ErrataEntry(BaseModel):
    """One printed row compared with the computed coefficient."""

    table: str
    degree: str
    printed: str
    computed: str
    agrees: bool
    note: str = ""


class CountCheck(BaseModel):
    name: str
    expected: int
    actual: int
    hard: bool

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


class ErrataReport(BaseModel):
    entries: list[ErrataEntry] = Field(default_factory=list)
    counts: list[CountCheck] = Field(default_factory=list)
    checks: dict[str, bool] = Field(default_factory=dict)

    @property
    def hard_failures(self) -> list[str]:
        failed = [name for name, ok in self.checks.items() if not ok]
        failed += [c.name for c in self.counts if c.hard and not c.ok]
        return failed
