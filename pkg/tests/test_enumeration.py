from __future__ import annotations

import networkx as nx
import pytest

from singram.canon import canonical_form, is_isomorphic
from singram.enumeration import (
    GenerationLimitError,
    RGraphCatalog,
    count_graphs,
    enumerate_r_graphs,
    generate_all,
    is_ramsey_stable,
    ramsey_number,
    stability_report,
    sweep_sr,
    sweep_ts,
)
from singram.graph import Graph
from singram.patterns import parse_pattern as P

# OEIS A000088
COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668]


@pytest.mark.parametrize("n", range(10))
def test_counts(n):
    assert count_graphs(n) == COUNTS[n]


@pytest.mark.parametrize("n", range(1, 8))
def test_generated_graphs_are_pairwise_non_isomorphic(n):
    graphs = list(generate_all(n))
    assert len({canonical_form(g) for g in graphs}) == len(graphs) == COUNTS[n]


def test_order_limit():
    with pytest.raises(GenerationLimitError):
        count_graphs(11)


def _names(cat: RGraphCatalog) -> list[str]:
    return sorted(canonical_form(g) for g in cat)


@pytest.mark.parametrize(
    "n,f1,f2,expected",
    [
        (5, "K3", "K3", ["C5"]),
        (5, "K3", "K13", ["C5", "K23"]),
        (6, "K3", "K13", ["K33"]),
        (4, "P4", "P4", ["K13", "K3+K1"]),
        (6, "PAW", "PAW", ["2K3", "K33"]),
        (5, "C4", "C4", ["C5", "BULL"]),
    ],
)
def test_r_graph_catalogs(n, f1, f2, expected):
    cat = enumerate_r_graphs(n, P(f1), P(f2))
    assert _names(cat) == sorted(canonical_form(P(e)) for e in expected)


def test_r_graphs_match_networkx_filter():
    # independent filter with networkx subgraph isomorphism
    from networkx.algorithms.isomorphism import GraphMatcher

    def nxg(g: Graph) -> nx.Graph:
        h = nx.Graph(g.edges())
        h.add_nodes_from(range(g.n))
        return h

    f1, f2 = P("K3"), P("K13")
    for n in range(1, 7):
        want = []
        for g in generate_all(n):
            a = GraphMatcher(nxg(g), nxg(f1)).subgraph_is_monomorphic()
            b = GraphMatcher(nxg(g.complement()), nxg(f2)).subgraph_is_monomorphic()
            if not a and not b:
                want.append(canonical_form(g))
        assert sorted(want) == _names(enumerate_r_graphs(n, f1, f2))


@pytest.mark.parametrize(
    "f1,f2,r",
    [("K3", "K3", 6), ("K3", "K13", 7), ("P4", "P4", 5), ("2K2", "2K2", 5), ("C4", "C4", 6), ("PAW", "PAW", 7), ("P3", "P3", 3)],
)
def test_ramsey_numbers(f1, f2, r):
    assert ramsey_number(P(f1), P(f2)) == r


def test_catalog_round_trip(tmp_path):
    cat = enumerate_r_graphs(5, P("K3"), P("K13"))
    g6, side = cat.write(tmp_path / "cat", names=("K3", "K13"))
    assert g6.read_text().count("\n") == 2
    back = RGraphCatalog.read(tmp_path / "cat")
    assert back.order == 5 and [g.to_graph6() for g in back] == [g.to_graph6() for g in cat]
    side.write_text(side.read_text().replace('"count": 2', '"count": 3'))
    with pytest.raises(ValueError):
        RGraphCatalog.read(tmp_path / "cat")


def test_stability():
    k3, k13, p4, c4 = P("K3"), P("K13"), P("P4"), P("C4")
    assert is_ramsey_stable(P("C5"), k3, k3)
    assert is_ramsey_stable(P("C5"), k13, k13)
    assert is_ramsey_stable(P("K13"), p4, p4)
    assert is_ramsey_stable(P("K3+K1"), p4, p4)
    rep = stability_report(P("K23"), k3, k13)
    assert not rep.stable and rep.offending() == [2, 3, 4]
    assert not is_ramsey_stable(P("C5"), c4, c4)
    assert not is_ramsey_stable(P("BULL"), c4, c4)
    assert rep.to_dict()["stable"] is False


def test_stability_requires_r_graph():
    with pytest.raises(ValueError):
        stability_report(P("K3"), P("K3"), P("K3"))


def test_sweeps():
    p3 = P("P3")
    assert sweep_sr(4, p3, p3).witness is not None
    res = sweep_sr(5, p3, p3)
    assert res.witness is None and res.graphs == 34
    value, graphs, examined = sweep_ts(5, P("K3"))
    assert value == 8 and 0 < examined <= 34 and graphs
    with pytest.raises(GenerationLimitError):
        sweep_ts(10, P("K3"))
