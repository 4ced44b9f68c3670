"""Immutable simple graphs stored as per-vertex neighbour bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

# Large enough for the biggest star construction in scope (157 vertices).
MAX_ORDER = 256


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range arguments."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class DegreeClass:
    degree: int
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an integer whose bit ``u`` is set when ``uv`` is an edge.
    Instances are hashable and compare equal only when labelled identically.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row < 0:
                raise GraphError(f"row {v} has bits beyond the vertex range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    # construction -------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> Graph:
        return cls(len(rows), tuple(int(r) for r in rows))

    # queries ---------------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def degree_classes(self) -> list[DegreeClass]:
        """Vertices grouped by degree, ascending by degree."""
        groups: dict[int, list[int]] = {}
        for v, d in enumerate(self.degrees()):
            groups.setdefault(d, []).append(v)
        return [DegreeClass(d, tuple(groups[d])) for d in sorted(groups)]

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    # derived graphs ------------------------------------------------------------

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.adj)))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced by ``vertices``, relabelled in ascending order."""
        vs = sorted(set(vertices))
        for v in vs:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range for n={self.n}")
        pos = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            r = 0
            for u in iter_bits(self.adj[v]):
                i = pos.get(u)
                if i is not None:
                    r |= 1 << i
            rows.append(r)
        return Graph(len(vs), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling is not a permutation")
        rows = [0] * self.n
        for v, r in enumerate(self.adj):
            nr = 0
            for u in iter_bits(r):
                nr |= 1 << perm[u]
            rows[perm[v]] = nr
        return Graph(self.n, tuple(rows))

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(r << shift for r in other.adj))

    def add_vertex(self, neighbors: Iterable[int]) -> Graph:
        """Append a new vertex ``n`` adjacent to ``neighbors``."""
        mask = 0
        for u in neighbors:
            mask |= 1 << u
        v = self.n
        rows = [r | (1 << v) if mask >> u & 1 else r for u, r in enumerate(self.adj)]
        rows.append(mask)
        return Graph(v + 1, tuple(rows))

    def remove_vertex(self, v: int) -> Graph:
        return self.induced(u for u in range(self.n) if u != v)

    # interchange ----------------------------------------------------------------

    def to_graph6(self) -> str:
        from .graph6 import encode

        return encode(self)

    @classmethod
    def from_graph6(cls, text: str) -> Graph:
        from .graph6 import decode

        return decode(text)

    def canonical_form(self) -> str:
        from .canon import canonical_form

        return canonical_form(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges}, g6={self.to_graph6()!r})"


def complement(g: Graph) -> Graph:
    return g.complement()


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    return g.induced(vertices)


def degrees(g: Graph) -> list[int]:
    return g.degrees()


def degree_classes(g: Graph) -> list[DegreeClass]:
    return g.degree_classes()


def is_regular(g: Graph) -> bool:
    return g.is_regular()
