"""Validated CLI run configuration."""

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from g2tok.core.config import get_grid_cap
from g2tok.core.output import OutputFormat


class RunConfig(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    command: Literal["verify", "patterns", "lhs", "rhs", "tables", "errata"]
    l1: int | None = Field(default=None, ge=1)
    l2: int | None = Field(default=None, ge=1)
    grid: int | None = Field(default=None, ge=1)
    parity: tuple[int, int] = (0, 0)
    output_format: OutputFormat = OutputFormat.TEXT
    q_value: Fraction | None = None
    threads: int = Field(default=1, ge=1)
    part: Literal["std", "adj", "all"] = "all"
    which: Literal["1", "2", "3", "final"] = "1"
    verbose: bool = False
    count_only: bool = False

    @field_validator("parity")
    @classmethod
    def _parity_bits(cls, v: tuple[int, int]) -> tuple[int, int]:
        if any(bit not in (0, 1) for bit in v):
            raise ValueError("parity entries must be 0 or 1")
        return v

    @field_validator("q_value", mode="before")
    @classmethod
    def _parse_q(cls, v):
        if v is None or isinstance(v, Fraction):
            return v
        return Fraction(str(v))

    @field_validator("q_value")
    @classmethod
    def _nonzero_q(cls, v: Fraction | None) -> Fraction | None:
        if v == 0:
            raise ValueError("q must be nonzero")
        return v

    @model_validator(mode="after")
    def _check_shape(self) -> "RunConfig":
        cap = get_grid_cap()
        if self.grid is not None and self.grid > cap:
            raise ValueError(f"grid bound {self.grid} exceeds the cap {cap} (G2TOK_GRID_CAP)")
        needs_weight = self.command in ("patterns", "lhs", "rhs") or (
            self.command == "verify" and self.grid is None
        )
        if needs_weight and (self.l1 is None or self.l2 is None):
            raise ValueError(f"{self.command} needs --l1 and --l2")
        return self
