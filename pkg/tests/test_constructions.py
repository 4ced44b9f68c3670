from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singram.constructions import (
    BUILDERS,
    build_c4_23,
    build_hk,
    build_k3_21,
    build_k3_claw_28,
    build_paw_30,
    build_sr_2k2,
    build_star_even,
    build_star_odd,
    build_star_odd_alt,
    build_theorem2,
    build_trian,
    build_turan_c1,
    build_turan_c2,
    c1_part_sizes,
    irregular_weighting,
    regular_bipartite,
    regular_graph,
    run_builder,
    substitute,
    substitution_classes,
)
from singram.graph import Graph, GraphError
from singram.patterns import parse_pattern
from singram.singular import find_singular_copy, is_sr_graph


@st.composite
def regular_parts(draw, count: int):
    parts = []
    for _ in range(count):
        p = draw(st.integers(1, 6))
        d = draw(st.integers(0, p - 1).filter(lambda d, p=p: p * d % 2 == 0))
        parts.append(regular_graph(p, d))
    return parts


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_substitution_degree_law(data):
    h = data.draw(st.integers(1, 6))
    pairs = [(a, b) for a in range(h) for b in range(a + 1, h)]
    keep = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    host = Graph.from_edges(h, [e for e, k in zip(pairs, keep) if k])
    parts = data.draw(regular_parts(h))
    g = substitute(host, parts)
    degs = g.degrees()
    off = 0
    for (size, deg), part in zip(substitution_classes(host, parts), parts):
        assert size == part.n
        assert all(degs[v] == deg for v in range(off, off + size))
        off += size


@pytest.mark.parametrize("p,d", [(5, 2), (6, 3), (7, 4), (8, 5), (1, 0), (9, 0)])
def test_regular_graph(p, d):
    g = regular_graph(p, d)
    assert g.n == p and set(g.degrees()) == {d}


def test_regular_graph_parity():
    with pytest.raises(GraphError):
        regular_graph(5, 3)


def test_regular_bipartite():
    g = regular_bipartite(6, 4)
    assert set(g.degrees()) == {4}
    assert all((a < 6) != (b < 6) for a, b in g.edges())


@pytest.mark.parametrize("k", [1, 2, 3])
def test_hk(k):
    r = build_hk(k)
    assert r.ok and r.graph.n == 4 * k
    assert r.actual_classes == [(2, d) for d in range(1, 2 * k + 1)]


@pytest.mark.parametrize(
    "builder,order,degrees",
    [
        (build_sr_2k2, 12, [4, 5, 7]),
        (build_k3_21, 21, [8, 9, 10, 11, 12]),
        (build_k3_claw_28, 28, [14, 15, 16, 17, 18]),
        (build_paw_30, 30, [10, 11, 12, 13, 14]),
        (build_c4_23, 23, None),
    ],
)
def test_ramsey_constructions(builder, order, degrees):
    r = builder()
    assert r.ok and r.graph.n == order
    if degrees is not None:
        assert sorted(d for _, d in r.actual_classes) == degrees


def test_sr2k2_is_sr_for_p4_too():
    g = build_sr_2k2().graph
    p4, m2 = parse_pattern("P4"), parse_pattern("2K2")
    assert is_sr_graph(g, p4, p4) and is_sr_graph(g, m2, p4) and is_sr_graph(g, p4, m2)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_theorem2(n):
    r = build_theorem2(n)
    assert r.ok and r.graph.n == (n - 1) ** 2
    assert len(r.actual_classes) == n - 1 and all(s == n - 1 for s, _ in r.actual_classes)


@pytest.mark.parametrize("s", [3, 5, 7])
def test_star_odd(s):
    r = build_star_odd(s)
    assert r.ok and r.graph.n == (2 * s - 1) * (2 * s - 2) + 1


@pytest.mark.parametrize("s", [2, 4, 6])
def test_star_even(s):
    r = build_star_even(s)
    assert r.ok and r.graph.n == (2 * s - 2) ** 2


def test_star_alt():
    r = build_star_odd_alt(1)
    assert r.ok and r.graph.n == 73


def test_star_parity_errors():
    with pytest.raises(GraphError):
        build_star_even(3)
    with pytest.raises(GraphError):
        build_star_odd(4)


@pytest.mark.parametrize("m", [3, 4, 5, 6, 7])
def test_irregular_weighting(m):
    w = irregular_weighting(m)
    assert len(w) == m * (m - 1) // 2 and set(w.values()) <= {1, 2, 3}
    deg = [sum(x for e, x in w.items() if v in e) for v in range(m)]
    assert len(set(deg)) == m


def test_c1_part_sizes():
    sizes = c1_part_sizes(12, 4, 3)
    assert sum(sizes) * 2 == 12 and sizes == sorted(set(sizes))
    with pytest.raises(GraphError):
        c1_part_sizes(13, 4, 3)


@pytest.mark.parametrize("n,p,q", [(12, 4, 3), (16, 3, 3), (9, 4, 2), (18, 4, 3)])
def test_turan_c1(n, p, q):
    r = build_turan_c1(n, p, q)
    assert r.ok and r.graph.n == n


@pytest.mark.parametrize("n,p,q", [(12, 4, 3), (12, 4, 2), (15, 6, 2)])
def test_turan_c2(n, p, q):
    r = build_turan_c2(n, p, q)
    assert r.ok and r.graph.n == n


@pytest.mark.parametrize("n", range(4, 13))
def test_trian(n):
    r = build_trian(n)
    assert r.ok and r.graph.n == n
    assert find_singular_copy(r.graph, parse_pattern("K3")) is None


def test_all_builders_through_registry():
    defaults = {"k": 2, "n": 5, "s": 4, "q": 1}
    special = {"star-odd": {"s": 3}, "turan-c1": {"n": 12, "p": 4, "q": 3}, "turan-c2": {"n": 12, "p": 4, "q": 3}, "trian": {"n": 9}}
    for name, info in BUILDERS.items():
        params = special[name] if name in special else {p: defaults[p] for p in info.params}
        r = run_builder(name, **params)
        assert r.ok, name
        assert r.to_dict()["classesMatch"] is True


def test_registry_errors():
    with pytest.raises(KeyError):
        run_builder("nope")
    with pytest.raises(GraphError):
        run_builder("hk")
