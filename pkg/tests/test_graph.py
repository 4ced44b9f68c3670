from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singram.graph import MAX_ORDER, Graph, GraphError, degree_classes, popcount


@st.composite
def graphs(draw, max_n: int = 12):
    n = draw(st.integers(0, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def test_from_edges_and_queries():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4 and g.num_edges == 3
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)
    assert g.neighbors(1) == [0, 2]
    assert g.degrees() == [1, 2, 2, 1]
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.is_connected() and not g.is_regular()


def test_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(GraphError):
        Graph.empty(MAX_ORDER + 1)


def test_degree_classes_partition():
    g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    classes = degree_classes(g)
    assert [c.degree for c in classes] == [1, 2, 3]
    assert sorted(v for c in classes for v in c.vertices) == list(range(5))
    assert {c.degree: c.vertices for c in classes}[1] == (1, 2, 4)


def test_add_remove_vertex():
    g = Graph.from_edges(3, [(0, 1)])
    h = g.add_vertex([0, 2])
    assert h.n == 4 and h.neighbors(3) == [0, 2]
    assert h.remove_vertex(3) == g
    assert h.remove_vertex(0).edges() == [(1, 2)]


@given(graphs())
def test_complement_involution(g):
    c = g.complement()
    assert c.complement() == g
    assert g.num_edges + c.num_edges == g.n * (g.n - 1) // 2
    assert all(a + b == g.n - 1 for a, b in zip(g.degrees(), c.degrees()))


@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_preserves_degree_multiset(g, r):
    perm = list(range(g.n))
    r.shuffle(perm)
    h = g.relabel(perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert all(h.has_edge(perm[a], perm[b]) for a, b in g.edges())


@settings(max_examples=50)
@given(graphs(max_n=10))
def test_induced_and_union(g):
    vs = list(range(0, g.n, 2))
    sub = g.induced(vs)
    for i, a in enumerate(vs):
        for j, b in enumerate(vs):
            if i != j:
                assert sub.has_edge(i, j) == g.has_edge(a, b)
    u = g.disjoint_union(sub)
    assert u.n == g.n + sub.n and u.num_edges == g.num_edges + sub.num_edges


def test_popcount():
    assert popcount(0) == 0 and popcount(0b1011) == 3
