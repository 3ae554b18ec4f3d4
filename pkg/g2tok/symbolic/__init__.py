"""Pattern sums with l1, l2 left symbolic, and their multi-degree tables."""

from g2tok.symbolic.engine import adj_symbolic, std_symbolic
from g2tok.symbolic.errata import compare_tables
from g2tok.symbolic.forms import AffineForm, ParityCond, form, parity, reduce_conditions
from g2tok.symbolic.sums import plain_sum, sum_b_entry, sum_entry, weighted_sum
from g2tok.symbolic.tables import collect, final_table, identify, table_model
from g2tok.symbolic.terms import SymSum, SymTerm

__all__ = [
    "AffineForm",
    "ParityCond",
    "form",
    "parity",
    "reduce_conditions",
    "SymTerm",
    "SymSum",
    "sum_entry",
    "sum_b_entry",
    "plain_sum",
    "weighted_sum",
    "std_symbolic",
    "adj_symbolic",
    "collect",
    "final_table",
    "identify",
    "table_model",
    "compare_tables",
]
