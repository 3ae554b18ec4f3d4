"""g2tok - exact verification of the G2 Tokuyama-type identity.

Both sides are computed as exact Laurent polynomials in x, y with integer
polynomial coefficients in t = q^-1; nothing is floating point.

Usage:
    # One weight
    report = verify(WeightParams(2, 3))
    assert report.equal

    # Every 1 <= l1, l2 <= 6
    grid = verify_grid(6, threads=4)

    # Individual sides
    lhs = lhs_sum(WeightParams(1, 1))
    rhs = rhs_formula(WeightParams(1, 1))

    # Symbolic tables (l1, l2 left free)
    from g2tok import symbolic
    report = symbolic.compare_tables()
"""

from g2tok.g2.identity import (
    lhs_adj,
    lhs_parts,
    lhs_std,
    lhs_sum,
    rhs_formula,
    verify,
    verify_grid,
    weyl_table,
)
from g2tok.g2.patterns import Pattern, enumerate_patterns, iter_patterns
from g2tok.g2.roots import WeightParams, weyl_dimension
from g2tok.schemas import SCHEMAS, ErrataReport, GridReport, TableModel, VerificationReport

__all__ = [
    "WeightParams",
    "Pattern",
    "iter_patterns",
    "enumerate_patterns",
    "weyl_dimension",
    "lhs_parts",
    "lhs_std",
    "lhs_adj",
    "lhs_sum",
    "rhs_formula",
    "verify",
    "verify_grid",
    "weyl_table",
    "VerificationReport",
    "GridReport",
    "TableModel",
    "ErrataReport",
    "SCHEMAS",
]
