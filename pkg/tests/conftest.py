"""Shared fixtures: small bitrades with hand-checked structure."""

import pytest

from bitrades.core import make_bitrade

# 2x3 bitrade whose mate shifts each row cyclically; separated, not
# homogeneous (rows hold 3 entries, columns 2)
TWO_BY_THREE_CIRC = [
    ("a", "c", "f"), ("a", "d", "g"), ("a", "e", "h"),
    ("b", "c", "g"), ("b", "d", "h"), ("b", "e", "f"),
]
TWO_BY_THREE_STAR = [
    ("a", "c", "g"), ("a", "d", "h"), ("a", "e", "f"),
    ("b", "c", "f"), ("b", "d", "g"), ("b", "e", "h"),
]

# smallest possible bitrade: one 2x2 cell pattern with swapped symbols
INTERCALATE_CIRC = [
    ("r1", "c1", "s1"), ("r1", "c2", "s2"),
    ("r2", "c1", "s2"), ("r2", "c2", "s1"),
]
INTERCALATE_STAR = [
    ("r1", "c1", "s2"), ("r1", "c2", "s1"),
    ("r2", "c1", "s1"), ("r2", "c2", "s2"),
]

# 3x4 bitrade of size 11 in which row "c" splits into two cycles
NONSEP_CIRC = [
    ("a", "d", "h"), ("a", "e", "i"), ("a", "f", "j"), ("a", "g", "k"),
    ("b", "d", "i"), ("b", "e", "l"), ("b", "f", "k"),
    ("c", "d", "k"), ("c", "e", "j"), ("c", "f", "l"), ("c", "g", "h"),
]
NONSEP_STAR = [
    ("a", "d", "i"), ("a", "e", "j"), ("a", "f", "k"), ("a", "g", "h"),
    ("b", "d", "k"), ("b", "e", "i"), ("b", "f", "l"),
    ("c", "d", "h"), ("c", "e", "l"), ("c", "f", "j"), ("c", "g", "k"),
]


def _shift(triples, suffix):
    return [(r + suffix, c + suffix, s + suffix) for (r, c, s) in triples]


@pytest.fixture
def two_by_three():
    return make_bitrade(TWO_BY_THREE_CIRC, TWO_BY_THREE_STAR)


@pytest.fixture
def intercalate():
    return make_bitrade(INTERCALATE_CIRC, INTERCALATE_STAR)


@pytest.fixture
def two_intercalates():
    """Disjoint union of two intercalates on disjoint alphabets."""
    circ = INTERCALATE_CIRC + _shift(INTERCALATE_CIRC, "x")
    star = INTERCALATE_STAR + _shift(INTERCALATE_STAR, "x")
    return make_bitrade(circ, star)


@pytest.fixture
def nonseparated():
    return make_bitrade(NONSEP_CIRC, NONSEP_STAR)
