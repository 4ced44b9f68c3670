from __future__ import annotations

import pytest

from singram.canon import is_isomorphic
from singram.patterns import PatternError, parse_pattern, pattern_name


@pytest.mark.parametrize(
    "text,n,m",
    [
        ("K3", 3, 3),
        ("K13", 4, 3),
        ("K1,7", 8, 7),
        ("K23", 5, 6),
        ("K(12)", 12, 66),
        ("P4", 4, 3),
        ("C5", 5, 5),
        ("2K2", 4, 2),
        ("3K1", 3, 0),
        ("PAW", 4, 4),
        ("bull", 5, 5),
        ("K3+K1", 4, 3),
        ("P3 + K1", 4, 2),
        ("2K3", 6, 6),
        ("S5", 6, 5),
        ("E4", 4, 0),
    ],
)
def test_orders_and_sizes(text, n, m):
    g = parse_pattern(text)
    assert (g.n, g.num_edges) == (n, m)


def test_equivalent_spellings():
    assert is_isomorphic(parse_pattern("K13"), parse_pattern("S3"))
    assert is_isomorphic(parse_pattern("K1,3"), parse_pattern("K13"))
    assert is_isomorphic(parse_pattern("K2+K1"), parse_pattern("P3").complement())
    assert parse_pattern("2K2") == parse_pattern("K2+K2")


def test_documented_vertex_orders():
    paw = parse_pattern("PAW")
    assert paw.neighbors(3) == [0] and paw.degrees()[0] == 3
    bull = parse_pattern("BULL")
    assert bull.neighbors(3) == [0] and bull.neighbors(4) == [2]
    assert parse_pattern("K23").neighbors(0) == [2, 3, 4]


def test_names():
    assert pattern_name("k13") == "K13"
    assert pattern_name("K1,12") == "K1,12"
    assert pattern_name("2K2") == "2K2"


@pytest.mark.parametrize("bad", ["", "Q3", "K", "C2", "0K3", "K3++K1", "P"])
def test_rejects(bad):
    with pytest.raises(PatternError):
        parse_pattern(bad)
