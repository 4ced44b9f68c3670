from __future__ import annotations

import csv
from fractions import Fraction

import pytest

from singram.graph import Graph
from singram.patterns import parse_pattern as P
from singram.singular import find_singular_copy
from singram.turan import (
    chromatic_number,
    contains_turan_graph,
    k3_bracket,
    ts_exact,
    ts_gap_report,
    ts_lower,
    turan_number,
    write_gap_csv,
    write_ts_csv,
)


def test_turan_number():
    assert turan_number(6, 5) == 13
    assert turan_number(4, 5) == 6
    assert turan_number(8, 5) == 24
    assert all(turan_number(n, 2) == 0 for n in range(10))
    assert turan_number(7, 3) == 12
    with pytest.raises(ValueError):
        turan_number(5, 1)


@pytest.mark.parametrize("name,chi", [("K3", 3), ("K13", 2), ("C5", 3), ("C4", 2), ("K4", 4), ("3K1", 1), ("PAW", 3)])
def test_chromatic_number(name, chi):
    assert chromatic_number(P(name)) == chi


@pytest.mark.parametrize("n,value", [(4, 5), (5, 8), (6, 13)])
def test_ts_exact_k3(n, value):
    res = ts_exact(n, "K3")
    assert res.value == value and res.method == "exhaustive"
    for w in res.witnesses:
        g = Graph.from_graph6(w)
        assert g.num_edges == value and find_singular_copy(g, P("K3")) is None


def test_ts_exact_k3_n6_contains_turan_graph():
    res = ts_exact(6, "K3")
    assert any(contains_turan_graph(Graph.from_graph6(w), 4) for w in res.witnesses)


def test_ts_exact_k2k1():
    assert ts_exact(4, "K2+K1").value == 5


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_k3_values_inside_brackets(n):
    lo, hi = k3_bracket(n)
    assert lo <= ts_exact(n, "K3").value <= hi


def test_k3_bracket_shapes():
    assert k3_bracket(6) == (Fraction(13), Fraction(13))
    assert k3_bracket(4) == (Fraction(4), Fraction(5))
    assert k3_bracket(5)[1] == 8


@pytest.mark.parametrize("n,value", [(6, 13), (7, 15), (8, 22)])
def test_ts_lower_k3(n, value):
    res = ts_lower(n, "K3")
    assert res.value == value and res.method == "construction-lower-only"


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_lower_below_exact(n):
    assert ts_lower(n, "K3").value <= ts_exact(n, "K3").value


def test_padding_monotone():
    vals = [ts_lower(n, "PAW").value for n in range(6, 16)]
    for a, b in zip(vals, vals[1:]):
        assert b >= a
    assert ts_lower(13, "PAW").source == "turan-c1(12)"


def test_padding_rejected_for_isolated_vertex_patterns():
    # a padded degree-0 vertex completes a transversal triangle to a singular K3+K1
    assert ts_lower(12, "K3+K1").value == 58
    assert ts_lower(13, "K3+K1").value == -1


def test_gap_report():
    rows = {r.n: r for r in ts_gap_report("K3", range(3, 15))}
    assert rows[8].gap == 2
    assert rows[3].status == "degenerate" and rows[3].gap is None
    for n in (6, 10, 14):
        assert rows[n].gap == 0
    assert all(r.status == "ok" for n, r in rows.items() if n >= 4)


def test_gap_report_needs_nontrivial_pattern():
    with pytest.raises(ValueError):
        ts_gap_report("3K1", [5])


def test_csv_outputs(tmp_path):
    res = [ts_exact(5, "K3"), ts_lower(8, "K3")]
    path = write_ts_csv(res, tmp_path / "ts.csv")
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["n", "k", "pattern", "value", "method", "witness_count"]
    assert rows[1][:5] == ["5", "1", "K3", "8", "exhaustive"]
    gp = write_gap_csv(ts_gap_report("K3", [3, 8]), tmp_path / "gap.csv")
    g = list(csv.reader(gp.open()))
    assert g[1][3] == "" and g[2][3] == "2"
