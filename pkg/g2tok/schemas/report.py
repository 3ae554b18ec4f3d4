"""Verification report schemas."""

from pydantic import BaseModel, Field

from g2tok.core.poly import LaurentPoly


class PolyTerm(BaseModel):
    """One term of a Laurent polynomial; t lists coefficients from t^0 upward."""

    ex: int
    ey: int
    t: list[int]


def terms_of(p: LaurentPoly) -> list[PolyTerm]:
    return [PolyTerm.model_validate(d) for d in p.to_json()]


def poly_of(terms: list[PolyTerm]) -> LaurentPoly:
    return LaurentPoly.from_json(t.model_dump() for t in terms)


class Params(BaseModel):
    l1: int = Field(ge=1)
    l2: int = Field(ge=1)


class VerificationReport(BaseModel):
    """Both sides of the identity at one (l1, l2)."""

    params: Params
    equal: bool
    pattern_count: int
    lhs: list[PolyTerm] = Field(default_factory=list)
    rhs: list[PolyTerm] = Field(default_factory=list)
    diff: list[PolyTerm] = Field(default_factory=list)
    adj_rule_histogram: dict[str, int] = Field(default_factory=dict)
    spot_points: int = 0
    spot_agree: bool = True

    def lhs_poly(self) -> LaurentPoly:
        return poly_of(self.lhs)

    def rhs_poly(self) -> LaurentPoly:
        return poly_of(self.rhs)

    def diff_poly(self) -> LaurentPoly:
        return poly_of(self.diff)


class CellSummary(BaseModel):
    l1: int
    l2: int
    equal: bool
    pattern_count: int
    lhs_terms: int
    spot_agree: bool = True


class GridReport(BaseModel):
    bound: int
    cells: list[CellSummary] = Field(default_factory=list)

    @property
    def all_equal(self) -> bool:
        return all(c.equal for c in self.cells)

    @property
    def spot_agree(self) -> bool:
        return all(c.spot_agree for c in self.cells)


class PolyReport(BaseModel):
    """One side of the identity, or one part of the pattern sum."""

    params: Params
    side: str
    terms: list[PolyTerm] = Field(default_factory=list)
    text: str = ""


class PatternList(BaseModel):
    params: Params
    count: int
    weyl_dimension: int
    patterns: list[str] = Field(default_factory=list)
