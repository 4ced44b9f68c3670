from __future__ import annotations

import io
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singram.enumeration import generate_all
from singram.graph import Graph
from singram.graph6 import Graph6Error, decode, encode, read_graph6_lines, write_graph6_lines


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_known_strings():
    assert encode(Graph.empty(0)) == "?"
    assert encode(Graph.from_edges(2, [(0, 1)])) == "A_"
    # K4 and the 5-cycle 0-1-2-3-4-0
    assert encode(Graph.from_edges(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])) == "C~"
    assert encode(Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])) == "Dhc"


@pytest.mark.parametrize("n", range(1, 8))
def test_roundtrip_all_small_graphs(n):
    for g in generate_all(n):
        s = encode(g)
        assert decode(s) == g
        assert nx.to_graph6_bytes(to_nx(g), header=False).decode().strip() == s


@settings(max_examples=40, deadline=None)
@given(st.integers(60, 100), st.integers(0, 2**32))
def test_large_orders_match_networkx(n, seed):
    r = random.Random(seed)
    g = Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n) if r.random() < 0.1])
    s = encode(g)
    assert decode(s) == g
    assert nx.to_graph6_bytes(to_nx(g), header=False).decode().strip() == s
    back = nx.from_graph6_bytes(s.encode())
    assert sorted(tuple(sorted(e)) for e in back.edges()) == g.edges()


def test_header_prefix_accepted():
    assert decode(">>graph6<<Dhc") == decode("Dhc")


@pytest.mark.parametrize("bad", ["", "D", "Dh", "Dhc?", "D h c", "C\x7f"])
def test_malformed(bad):
    with pytest.raises(Graph6Error):
        decode(bad)


def test_nonzero_padding_rejected():
    # n=2 uses one data char; only the top bit may be set
    with pytest.raises(Graph6Error):
        decode("A`")


def test_stream_helpers():
    graphs = list(generate_all(4))
    buf = io.StringIO()
    assert write_graph6_lines(buf, graphs) == len(graphs)
    buf.seek(0)
    assert list(read_graph6_lines(buf)) == graphs
