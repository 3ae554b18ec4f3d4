"""Environment configuration and run validation."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from g2tok.core.config import get_grid_cap, get_max_terms, get_spot_points, get_threads
from g2tok.core.errors import TermLimitError
from g2tok.core.rational import RF_ONE
from g2tok.schemas import RunConfig
from g2tok.symbolic.forms import form
from g2tok.symbolic.terms import SymSum, SymTerm


def test_defaults(monkeypatch):
    for name in ("G2TOK_GRID_CAP", "G2TOK_THREADS", "G2TOK_MAX_TERMS", "G2TOK_SPOT_POINTS"):
        monkeypatch.delenv(name, raising=False)
    assert get_grid_cap() == 12
    assert get_threads() == 1
    assert get_max_terms() == 200_000
    assert get_spot_points() == 20


def test_overrides(monkeypatch):
    monkeypatch.setenv("G2TOK_THREADS", "4")
    monkeypatch.setenv("G2TOK_SPOT_POINTS", "0")
    assert get_threads() == 4
    assert get_spot_points() == 0


@pytest.mark.parametrize("value", ["zero", "0", "-3"])
def test_invalid_threads(monkeypatch, value):
    monkeypatch.setenv("G2TOK_THREADS", value)
    with pytest.raises(ValueError):
        get_threads()


def test_term_limit(monkeypatch):
    monkeypatch.setenv("G2TOK_MAX_TERMS", "2")
    terms = [SymTerm(RF_ONE, form(i), form()) for i in range(3)]
    with pytest.raises(TermLimitError):
        SymSum(terms)


def test_grid_cap(monkeypatch):
    monkeypatch.setenv("G2TOK_GRID_CAP", "3")
    assert RunConfig(command="verify", grid=3).grid == 3
    with pytest.raises(ValidationError):
        RunConfig(command="verify", grid=4)


def test_run_config():
    cfg = RunConfig(command="verify", l1=2, l2=3, q_value="3/2")
    assert cfg.q_value == Fraction(3, 2)
    assert RunConfig(command="tables", parity=(1, 1)).parity == (1, 1)
    with pytest.raises(ValidationError):
        RunConfig(command="tables", parity=(0, 2))
    with pytest.raises(ValidationError):
        RunConfig(command="lhs", l1=1)
    assert RunConfig(command="errata").l1 is None
