"""k-singular multisets, singular vertex sets and singular pattern copies.

A vertex set is k-singular in a host when its host degrees are all equal or
pairwise at least ``k`` apart.  A singular copy of a pattern is such a set
whose induced host graph contains the pattern as a spanning (not necessarily
induced) subgraph.  Isolated pattern vertices still occupy a host vertex and
so still constrain the degrees.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from .graph import Graph, GraphError, iter_bits

ALL_EQUAL = "all-equal"
GAPPED = "gaps-at-least-k"


def is_k_singular(values: Sequence[int], k: int) -> bool:
    """True when ``values`` is constant or its sorted gaps are all >= k."""
    if k < 1:
        raise ValueError("k must be positive")
    vals = sorted(values)
    if not vals or vals[0] == vals[-1]:
        return True
    return all(b - a >= k for a, b in zip(vals, vals[1:]))


def extract_singular(values: Sequence[int], n: int, k: int) -> tuple[list[int], list[int]]:
    """Pick ``n`` entries of ``values`` forming a k-singular multiset.

    Needs at least ``k(n-1)^2 + 1`` values.  Either some value repeats ``n``
    times, or there are at least ``k(n-1)+1`` distinct values and every
    ``k``-th one in sorted order is taken.  Returns (indices, picked values).
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    need = k * (n - 1) ** 2 + 1
    if len(values) < need:
        raise ValueError(f"need at least {need} values, got {len(values)}")
    positions: dict[int, list[int]] = {}
    for i, v in enumerate(values):
        positions.setdefault(v, []).append(i)
    for v in sorted(positions):
        if len(positions[v]) >= n:
            idx = positions[v][:n]
            return idx, [values[i] for i in idx]
    distinct = sorted(positions)
    picked = [distinct[j * k] for j in range(n)]
    idx = [positions[v][0] for v in picked]
    return idx, picked


@dataclass(frozen=True)
class SingularWitness:
    vertices: tuple[int, ...]
    host_degrees: tuple[int, ...]
    mode: str
    # embedding[i] is the host vertex carrying pattern vertex i
    embedding: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "hostDegrees": list(self.host_degrees),
            "mode": self.mode,
            "embedding": list(self.embedding),
        }


def singular_sets(g: Graph, p: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every p-subset of V(g) whose degree multiset is k-singular.

    All-equal sets come first, class by class in ascending degree; then the
    transversals with pairwise gaps >= k, ordered by their class sequence and
    then by vertex choice.
    """
    if p < 1:
        raise ValueError("p must be positive")
    if k < 1:
        raise ValueError("k must be positive")
    classes = g.degree_classes()
    for cls in classes:
        yield from combinations(cls.vertices, p)
    if p == 1:
        return

    def chains(start: int, last: int | None, depth: int) -> Iterator[list[int]]:
        if depth == p:
            yield []
            return
        for ci in range(start, len(classes)):
            if last is not None and classes[ci].degree - classes[last].degree < k:
                continue
            for rest in chains(ci + 1, ci, depth + 1):
                yield [ci] + rest

    for chain in chains(0, None, 0):
        for pick in product(*(classes[ci].vertices for ci in chain)):
            yield tuple(sorted(pick))


# embedding -----------------------------------------------------------------


@dataclass(frozen=True)
class PatternPlan:
    """Placement order for embedding a pattern.

    ``req[d]`` lists the earlier depths adjacent to the vertex at depth ``d``;
    ``twin[d]`` is an earlier depth holding a twin of it (its image must be
    smaller), or -1.
    """

    p: int
    order: tuple[int, ...]
    req: tuple[tuple[int, ...], ...]
    twin: tuple[int, ...]
    degree: tuple[int, ...]


@lru_cache(maxsize=256)
def plan_pattern(pattern: Graph) -> PatternPlan:
    p = pattern.n
    degs = pattern.degrees()
    order: list[int] = []
    placed = 0
    remaining = set(range(p))
    while remaining:
        v = max(
            remaining,
            key=lambda u: (bin(pattern.adj[u] & placed).count("1"), degs[u], -u),
        )
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    depth = {v: d for d, v in enumerate(order)}
    req = []
    twin = []
    for d, v in enumerate(order):
        req.append(tuple(sorted(depth[u] for u in iter_bits(pattern.adj[v]) if depth[u] < d)))
        t = -1
        for e in range(d - 1, -1, -1):
            u = order[e]
            if (pattern.adj[u] & ~(1 << v)) == (pattern.adj[v] & ~(1 << u)):
                t = e
                break
        twin.append(t)
    return PatternPlan(p, tuple(order), tuple(req), tuple(twin), tuple(degs[v] for v in order))


class _HostIndex:
    """Degree bookkeeping shared by a graph and its complement."""

    def __init__(self, g: Graph) -> None:
        self.n = g.n
        self.deg = g.degrees()
        self.class_mask: dict[int, int] = {}
        for v, d in enumerate(self.deg):
            self.class_mask[d] = self.class_mask.get(d, 0) | (1 << v)
        self.values = sorted(self.class_mask)
        self._gap: dict[tuple[int, int], int] = {}

    def gap_mask(self, d: int, k: int) -> int:
        key = (d, k)
        m = self._gap.get(key)
        if m is None:
            m = 0
            for v, mask in self.class_mask.items():
                if abs(v - d) >= k:
                    m |= mask
            self._gap[key] = m
        return m

    def spaced_count(self, mask: int, k: int) -> int:
        """Largest number of degree values present in ``mask`` pairwise >= k apart."""
        count = 0
        last = None
        for v in self.values:
            if self.class_mask[v] & mask and (last is None or v - last >= k):
                count += 1
                last = v
        return count


def _embed(
    adj: Sequence[int],
    plan: PatternPlan,
    allowed: int,
    index: _HostIndex | None,
    mode: str | None,
    k: int,
) -> list[int] | None:
    p = plan.p
    if p == 0:
        return []
    img = [0] * p
    req, twin = plan.req, plan.twin

    def domain(d: int, used: int, valid: int, upto: int) -> int:
        cand = allowed & ~used & valid
        for t in req[d]:
            if t < upto:
                cand &= adj[img[t]]
        return cand

    def lookahead(d0: int, used: int, valid: int) -> bool:
        union = 0
        for d in range(d0, p):
            dom = domain(d, used, valid, d0)
            if not dom:
                return False
            union |= dom
        if mode == GAPPED and index is not None:
            return index.spaced_count(union, k) >= p - d0
        return True

    def rec(d: int, used: int, valid: int) -> bool:
        if d == p:
            return True
        cand = domain(d, used, valid, d)
        if twin[d] >= 0:
            cand &= ~((1 << (img[twin[d]] + 1)) - 1)
        for h in iter_bits(cand):
            img[d] = h
            nvalid = valid
            if mode == GAPPED:
                nvalid &= index.gap_mask(index.deg[h], k)
            elif mode == ALL_EQUAL and d == 0:
                nvalid &= index.class_mask[index.deg[h]]
            nused = used | (1 << h)
            if mode == GAPPED and d + 1 < p and not lookahead(d + 1, nused, nvalid):
                continue
            if rec(d + 1, nused, nvalid):
                return True
        return False

    full = (1 << len(adj)) - 1
    if rec(0, 0, full):
        out = [0] * p
        for d, v in enumerate(plan.order):
            out[v] = img[d]
        return out
    return None


def _find_copy(adj: Sequence[int], pattern: Graph, k: int, index: _HostIndex) -> SingularWitness | None:
    p = pattern.n
    if p > index.n:
        return None
    plan = plan_pattern(pattern)
    maxdeg = max(plan.degree, default=0)
    for d in index.values:
        mask = index.class_mask[d]
        if bin(mask).count("1") < p:
            continue
        # the pattern's max degree must fit inside the class
        if maxdeg and not any(bin(adj[v] & mask).count("1") >= maxdeg for v in iter_bits(mask)):
            continue
        emb = _embed(adj, plan, mask, index, ALL_EQUAL, k)
        if emb is not None:
            return _witness(emb, index, ALL_EQUAL)
    if p > 1 and index.spaced_count((1 << index.n) - 1, k) >= p:
        emb = _embed(adj, plan, (1 << index.n) - 1, index, GAPPED, k)
        if emb is not None:
            return _witness(emb, index, GAPPED)
    return None


def _witness(emb: list[int], index: _HostIndex, mode: str) -> SingularWitness:
    vs = tuple(sorted(emb))
    return SingularWitness(vs, tuple(index.deg[v] for v in vs), mode, tuple(emb))


def find_singular_copy(host: Graph, pattern: Graph, k: int = 1) -> SingularWitness | None:
    """A k-singular copy of ``pattern`` in ``host``, or None."""
    if k < 1:
        raise ValueError("k must be positive")
    return _find_copy(host.adj, pattern, k, _HostIndex(host))


def is_sr_graph(g: Graph, f1: Graph, f2: Graph, k: int = 1) -> bool:
    """No singular ``f1`` in ``g`` and no singular ``f2`` in its complement."""
    return sr_violation(g, f1, f2, k) is None


def sr_violation(g: Graph, f1: Graph, f2: Graph, k: int = 1) -> tuple[str, SingularWitness] | None:
    """First singular copy found, tagged with the side it lives on."""
    if k < 1:
        raise ValueError("k must be positive")
    index = _HostIndex(g)
    w = _find_copy(g.adj, f1, k, index)
    if w is not None:
        return "graph", w
    comp = g.complement()
    w = _find_copy(comp.adj, f2, k, index)
    if w is not None:
        # report complement degrees for the complement side
        return "complement", SingularWitness(
            w.vertices, tuple(g.n - 1 - d for d in w.host_degrees), w.mode, w.embedding
        )
    return None


def find_embedding(host: Graph, pattern: Graph, allowed: int | None = None) -> list[int] | None:
    """Any copy of ``pattern`` in ``host`` (no degree condition)."""
    mask = (1 << host.n) - 1 if allowed is None else allowed
    if pattern.n > bin(mask).count("1"):
        return None
    return _embed(host.adj, plan_pattern(pattern), mask, None, None, 1)


def contains_subgraph(host: Graph, pattern: Graph) -> bool:
    return find_embedding(host, pattern) is not None


def is_rgraph(g: Graph, f1: Graph, f2: Graph) -> bool:
    """``g`` has no ``f1`` subgraph and its complement has no ``f2`` subgraph."""
    return not contains_subgraph(g, f1) and not contains_subgraph(g.complement(), f2)


def verify_witness(host: Graph, pattern: Graph, k: int, w: SingularWitness) -> bool:
    """Re-check a witness directly: degrees, mode and embedding."""
    if len(w.vertices) != pattern.n or len(set(w.vertices)) != pattern.n:
        return False
    degs = host.degrees()
    if tuple(degs[v] for v in w.vertices) != w.host_degrees:
        return False
    if not is_k_singular(w.host_degrees, k):
        return False
    if sorted(w.embedding) != sorted(w.vertices):
        return False
    return all(host.has_edge(w.embedding[a], w.embedding[b]) for a, b in pattern.edges())


# trees ------------------------------------------------------------------------


@dataclass(frozen=True)
class SingularTree:
    witness: SingularWitness
    edges: tuple[tuple[int, int], ...]
    side: str  # "graph" or "complement"


def find_singular_tree(g: Graph, n: int, k: int = 1) -> SingularTree:
    """A k-singular n-set spanned by a tree in ``g`` or in its complement.

    The set comes from :func:`extract_singular` on the degree sequence; either
    the induced graph or its complement is connected, and a BFS tree of the
    connected side is returned.
    """
    need = k * (n - 1) ** 2 + 1
    if g.n < need:
        raise GraphError(f"order {g.n} below {need}")
    degs = g.degrees()
    idx, _ = extract_singular(degs, n, k)
    vs = sorted(idx)
    sub = g.induced(vs)
    side, host, host_degs = "graph", sub, degs
    if not sub.is_connected():
        side, host = "complement", sub.complement()
        host_degs = [g.n - 1 - d for d in degs]
    edges = []
    seen = {0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b in iter_bits(host.adj[a]):
            if b not in seen:
                seen.add(b)
                queue.append(b)
                edges.append((vs[a], vs[b]))
    assert len(seen) == len(vs)
    values = tuple(host_degs[v] for v in vs)
    mode = ALL_EQUAL if len(set(values)) == 1 else GAPPED
    return SingularTree(SingularWitness(tuple(vs), values, mode), tuple(edges), side)


def brute_force_singular_copy(host: Graph, pattern: Graph, k: int) -> bool:
    """Reference check: every p-subset and every bijection."""
    from itertools import permutations

    p = pattern.n
    degs = host.degrees()
    pe = pattern.edges()
    for s in combinations(range(host.n), p):
        if not is_k_singular([degs[v] for v in s], k):
            continue
        for perm in permutations(s):
            if all(host.has_edge(perm[a], perm[b]) for a, b in pe):
                return True
    return False
