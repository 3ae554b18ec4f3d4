"""Tests for Littelmann pattern enumeration and decorations."""

import pytest

from g2tok.g2.patterns import (
    EntryStatus,
    Pattern,
    decorations,
    enumerate_patterns,
    format_pattern,
    has_bad_middle,
    is_valid,
    iter_patterns,
)
from g2tok.g2.roots import WeightParams, weyl_dimension

RHO = WeightParams(1, 1)


@pytest.mark.parametrize("l1,l2", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)])
def test_count_matches_weyl_dimension(l1, l2):
    w = WeightParams(l1, l2)
    assert sum(1 for _ in iter_patterns(w)) == weyl_dimension(w)


def test_rho_has_sixty_four_patterns():
    patterns = enumerate_patterns(RHO)
    assert len(patterns) == 64
    assert len(set(patterns)) == 64
    assert all(is_valid(p, RHO) for p in patterns)


def test_restricting_e_partitions_the_set():
    w = WeightParams(3, 2)
    chunks = [list(iter_patterns(w, range(i, 4, 2))) for i in range(2)]
    assert sorted(chunks[0] + chunks[1], key=Pattern.as_tuple) == sorted(
        enumerate_patterns(w), key=Pattern.as_tuple
    )


def test_b_is_circled_only_at_half_c():
    w = WeightParams(2, 2)
    even = decorations(Pattern(a=1, b=1, c=2, d=1, e=0, f=0), w)
    odd = decorations(Pattern(a=1, b=1, c=1, d=0, e=0, f=0), w)
    assert even.status("b") in (EntryStatus.CIRCLED, EntryStatus.BOTH)
    assert odd.status("b") not in (EntryStatus.CIRCLED, EntryStatus.BOTH)


def test_zero_pattern_decorations():
    dec = decorations(Pattern(0, 0, 0, 0, 0, 0), RHO)
    for entry in "abcdef":
        assert dec.status(entry) == EntryStatus.CIRCLED


def test_both_status():
    w = WeightParams(1, 1)
    dec = decorations(Pattern(a=0, b=0, c=0, d=0, e=0, f=1), w)
    assert dec.status("f") == EntryStatus.BOXED
    assert EntryStatus.of(True, True) == EntryStatus.BOTH


def test_bad_middle():
    assert has_bad_middle(Pattern(a=1, b=1, c=1, d=0, e=0, f=0))
    assert has_bad_middle(Pattern(a=4, b=3, c=5, d=2, e=1, f=0))
    assert not has_bad_middle(Pattern(a=1, b=1, c=2, d=0, e=0, f=0))


def test_format_pattern():
    p = Pattern(a=1, b=1, c=1, d=0, e=0, f=0)
    assert format_pattern(p) == "1 1 1 0 0 0"
    decorated = format_pattern(p, RHO)
    assert decorated.split()[0] == "1°"
    assert decorated.split()[4] == "0°"
