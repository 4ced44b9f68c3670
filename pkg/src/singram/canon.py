"""Canonical labelling by partition refinement and individualisation.

The search tree is the usual one: refine to an equitable ordered partition,
individualise a vertex of the first non-singleton cell, recurse.  Each leaf
gives a vertex ordering; the canonical ordering is the one whose relabelled
adjacency rows are lexicographically least.  Subtrees are pruned with twin
transpositions and with automorphisms discovered at equal leaves.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, iter_bits, popcount


@dataclass
class CanonResult:
    order: list[int]  # order[i] is the vertex placed at position i
    key: tuple[int, ...]
    orbits: list[int]  # smallest vertex of each vertex's automorphism orbit
    generators: list[tuple[int, ...]] = field(default_factory=list)


def _refine(adj: tuple[int, ...], cells: list[list[int]], queue: list[int]) -> list[list[int]]:
    """Refine ``cells`` to an equitable partition.

    ``queue`` holds indices of splitter cells.  Fragments of a split cell are
    ordered by increasing neighbour count, so the result depends only on the
    graph structure and the incoming partition.
    """
    cells = [list(c) for c in cells]
    pending = list(queue)
    while pending:
        s = pending.pop(0)
        wmask = 0
        for v in cells[s]:
            wmask |= 1 << v
        new_cells: list[list[int]] = []
        remap: list[list[int]] = []
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                remap.append([len(new_cells)])
                new_cells.append(cell)
                continue
            buckets: dict[int, list[int]] = {}
            for v in cell:
                buckets.setdefault(popcount(adj[v] & wmask), []).append(v)
            if len(buckets) == 1:
                remap.append([len(new_cells)])
                new_cells.append(cell)
                continue
            idx = []
            for c in sorted(buckets):
                idx.append(len(new_cells))
                new_cells.append(buckets[c])
            remap.append(idx)
        if len(new_cells) != len(cells):
            moved = []
            for ci, idx in enumerate(remap):
                if len(idx) > 1:
                    moved.extend(idx)
            pending = [j for i in pending for j in remap[i]]
            for j in moved:
                if j not in pending:
                    pending.append(j)
            cells = new_cells
    return cells


def _leaf_key(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        r = 0
        for u in iter_bits(adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def canonical_labeling(g: Graph) -> CanonResult:
    n = g.n
    adj = g.adj
    if n == 0:
        return CanonResult([], (), [], [])
    best_key: tuple[int, ...] | None = None
    best_order: list[int] = []
    gens: list[tuple[int, ...]] = []
    seen_gens: set[tuple[int, ...]] = set()
    orbits = _UnionFind(n)

    def twins(u: int, w: int) -> bool:
        return (adj[u] & ~(1 << w)) == (adj[w] & ~(1 << u))

    def record(perm: tuple[int, ...]) -> None:
        if perm in seen_gens:
            return
        seen_gens.add(perm)
        gens.append(perm)
        for v in range(n):
            orbits.union(v, perm[v])

    def leaf(order: list[int]) -> None:
        nonlocal best_key, best_order
        key = _leaf_key(adj, order)
        if best_key is None or key < best_key:
            best_key, best_order = key, order
        elif key == best_key:
            perm = [0] * n
            for a, b in zip(best_order, order):
                perm[a] = b
            if any(perm[v] != v for v in range(n)):
                record(tuple(perm))

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        if len(cells) == n:
            leaf([c[0] for c in cells])
            return
        ti = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[ti]
        explored: list[int] = []
        for w in target:
            if any(twins(u, w) for u in explored):
                u = next(u for u in explored if twins(u, w))
                perm = list(range(n))
                perm[u], perm[w] = w, u
                record(tuple(perm))
                continue
            stab = [p for p in gens if all(p[x] == x for x in prefix)]
            if stab and explored:
                uf = _UnionFind(n)
                for p in stab:
                    for v in range(n):
                        uf.union(v, p[v])
                if any(uf.find(u) == uf.find(w) for u in explored):
                    continue
            explored.append(w)
            rest = [v for v in target if v != w]
            child = cells[:ti] + [[w], rest] + cells[ti + 1 :]
            search(_refine(adj, child, [ti]), prefix + [w])

    root = _refine(adj, [list(range(n))], [0])
    search(root, [])
    assert best_key is not None
    return CanonResult(best_order, best_key, [orbits.find(v) for v in range(n)], gens)


def canonical_graph(g: Graph) -> Graph:
    res = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(res.order):
        perm[v] = i
    return g.relabel(perm)


def canonical_form(g: Graph) -> str:
    """graph6 text of the canonical relabelling; equal iff isomorphic."""
    return canonical_graph(g).to_graph6()


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.num_edges != b.num_edges:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a) == canonical_form(b)


def automorphism_orbits(g: Graph) -> list[int]:
    return canonical_labeling(g).orbits
