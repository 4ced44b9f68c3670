"""Lower-bound constructions.

Each builder returns a :class:`ConstructionReport`: the graph, the degree
classes it is designed to have, and whether it passed the singular checks it
was built for.  Expected classes are computed from the design (usually the
substitution degree law), never read back from the graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Sequence

from .graph import MAX_ORDER, Graph, GraphError
from .patterns import BULL, Cn, Kn, build, parse_pattern
from .singular import find_singular_copy, is_sr_graph


@dataclass
class ConstructionReport:
    name: str
    graph: Graph
    # (class size, class degree), ascending by degree
    expected_classes: list[tuple[int, int]]
    patterns: tuple[str, str | None]
    k: int
    verified_sr: bool
    classes_match: bool
    params: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verified_sr and self.classes_match

    @property
    def actual_classes(self) -> list[tuple[int, int]]:
        return [(c.size, c.degree) for c in self.graph.degree_classes()]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "order": self.graph.n,
            "edges": self.graph.num_edges,
            "graph6": self.graph.to_graph6(),
            "expectedClasses": [{"size": s, "degree": d} for s, d in self.expected_classes],
            "actualClasses": [{"size": s, "degree": d} for s, d in self.actual_classes],
            "patterns": list(self.patterns),
            "k": self.k,
            "verifiedSR": self.verified_sr,
            "classesMatch": self.classes_match,
        }


def _normalise(classes: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    merged: dict[int, int] = {}
    for size, deg in classes:
        merged[deg] = merged.get(deg, 0) + size
    return sorted(((s, d) for d, s in merged.items()), key=lambda t: t[1])


def _report(
    name: str,
    g: Graph,
    expected: Sequence[tuple[int, int]],
    f1: str,
    f2: str | None,
    k: int = 1,
    params: dict | None = None,
    distinct_classes: bool = True,
) -> ConstructionReport:
    """Verify ``g`` and package the result.

    With ``f2`` None only the graph side is checked (singular Turan setting).
    When ``distinct_classes`` is set, the designed classes must already have
    pairwise different degrees.
    """
    exp = _normalise(expected)
    if distinct_classes and len(exp) != len(expected):
        exp_match = False
    else:
        exp_match = exp == [(c.size, c.degree) for c in g.degree_classes()]
    p1 = parse_pattern(f1)
    if f2 is None:
        ok = find_singular_copy(g, p1, k) is None
    else:
        ok = is_sr_graph(g, p1, parse_pattern(f2), k)
    return ConstructionReport(name, g, exp, (f1, f2), k, ok, exp_match, dict(params or {}))


# generic tools ------------------------------------------------------------------


def substitute(host: Graph, parts: Sequence[Graph]) -> Graph:
    """host[parts]: part i replaces host vertex i; joins follow host edges."""
    if len(parts) != host.n:
        raise GraphError("need one part per host vertex")
    total = sum(p.n for p in parts)
    if total > MAX_ORDER:
        raise GraphError(f"substitution order {total} exceeds {MAX_ORDER}")
    offsets = []
    off = 0
    for p in parts:
        offsets.append(off)
        off += p.n
    blocks = [((1 << p.n) - 1) << o for p, o in zip(parts, offsets)]
    rows = []
    for i, p in enumerate(parts):
        ext = 0
        for j in range(host.n):
            if host.adj[i] >> j & 1:
                ext |= blocks[j]
        for r in p.adj:
            rows.append((r << offsets[i]) | ext)
    return Graph(total, tuple(rows))


def substitution_classes(host: Graph, parts: Sequence[Graph]) -> list[tuple[int, int]]:
    """(size, degree) per part from the substitution degree law (parts must be regular)."""
    out = []
    for i, p in enumerate(parts):
        if not p.is_regular():
            raise GraphError(f"part {i} is not regular")
        internal = p.degrees()[0] if p.n else 0
        external = sum(parts[j].n for j in range(host.n) if host.adj[i] >> j & 1)
        out.append((p.n, internal + external))
    return out


def regular_graph(p: int, d: int) -> Graph:
    """Circulant d-regular graph on p vertices.

    Vertex i is joined to i +- 1..floor(d/2), plus i + p/2 when d is odd.
    """
    if not 0 <= d < p:
        raise GraphError(f"need 0 <= d < p, got p={p}, d={d}")
    if (p * d) % 2:
        raise GraphError(f"no {d}-regular graph on {p} vertices (parity)")
    edges = set()
    for i in range(p):
        for j in range(1, d // 2 + 1):
            edges.add(tuple(sorted((i, (i + j) % p))))
        if d % 2:
            edges.add(tuple(sorted((i, (i + p // 2) % p))))
    return Graph.from_edges(p, edges)


def regular_bipartite(p: int, d: int) -> Graph:
    """d-regular bipartite graph on sides 0..p-1 and p..2p-1 via cyclic shifts."""
    if not 0 <= d <= p:
        raise GraphError(f"need 0 <= d <= p, got p={p}, d={d}")
    return Graph.from_edges(2 * p, [(i, p + (i + j) % p) for i in range(p) for j in range(d)])


def _copies(g: Graph, m: int) -> Graph:
    out = Graph.empty(0)
    for _ in range(m):
        out = out.disjoint_union(g)
    return out


def _join_blocks(n: int, rows: list[int], a: Sequence[int], b: Sequence[int]) -> None:
    for x in a:
        for y in b:
            rows[x] |= 1 << y
            rows[y] |= 1 << x


# singular Ramsey constructions ---------------------------------------------------


def build_hk(k: int) -> ConstructionReport:
    """a_1..a_2k and b_1..b_2k with a_i ~ b_j exactly when i <= j."""
    if k < 1:
        raise GraphError("k must be positive")
    m = 2 * k
    g = Graph.from_edges(2 * m, [(i, m + j) for i in range(m) for j in range(i, m)])
    expected = [(2, d) for d in range(1, m + 1)]
    return _report("hk", g, expected, "P3", "P3", k, {"k": k})


def build_sr_2k2() -> ConstructionReport:
    """Three classes inducing K3+K1, joined so the class degrees are 7, 5, 4."""
    x1, x2, x3, x, y1, y2, y3, y, z1, z2, z3, z = range(12)
    edges = [
        (x1, x2), (x1, x3), (x2, x3),
        (y1, y2), (y1, y3), (y2, y3),
        (z1, z2), (z1, z3), (z2, z3),
        (x1, y1), (x1, y2), (x1, y),
        (x2, y2), (x2, y3), (x2, y),
        (x3, y1), (x3, y3), (x3, y),
        (x, y1), (x, y2), (x, y3), (x, y),
        (x1, z1), (x1, z), (x2, z2), (x2, z), (x3, z3), (x3, z),
        (x, z1), (x, z2), (x, z3),
        (y, z),
    ]  # fmt: skip
    g = Graph.from_edges(12, edges)
    return _report("sr2k2", g, [(4, 7), (4, 5), (4, 4)], "2K2", "2K2")


def build_k3_21() -> ConstructionReport:
    """C5[C5, C5, C5, 2K2, K2]."""
    host = build(Cn(5))
    parts = [regular_graph(5, 2)] * 3 + [_copies(build(Kn(2)), 2), build(Kn(2))]
    g = substitute(host, parts)
    return _report("k3-21", g, substitution_classes(host, parts), "K3", "K3")


def build_k3_claw_28() -> ConstructionReport:
    """Classes K33, C5, K33, C5, K33 with V5 split into its first 4 and last 2 vertices."""
    k33 = regular_graph(6, 3)
    c5 = regular_graph(5, 2)
    parts = [k33, c5, k33, c5, k33]
    g0 = Graph.empty(0)
    for p in parts:
        g0 = g0.disjoint_union(p)
    v1, v2, v3, v4, v5 = (list(range(s, s + p.n)) for s, p in zip((0, 6, 11, 17, 22), parts))
    v5a, v5b = v5[:4], v5[4:]
    rows = list(g0.adj)
    _join_blocks(28, rows, v1 + v2, v3 + v4)
    _join_blocks(28, rows, v1 + v2, v5a)
    _join_blocks(28, rows, v5b, v3 + v4)
    g = Graph(28, tuple(rows))
    expected = [(6, 3 + 11 + 4), (5, 2 + 11 + 4), (6, 3 + 11 + 2), (5, 2 + 11 + 2), (6, 3 + 11)]
    return _report("k3claw28", g, expected, "K3", "K13", params={"split": [4, 2]})


def build_paw_30() -> ConstructionReport:
    """Classes 2K3, K33, 2K3, K33, 2K3; V5 split into its first 2 and last 4 vertices."""
    two_k3 = _copies(build(Kn(3)), 2)
    k33 = regular_graph(6, 3)
    parts = [two_k3, k33, two_k3, k33, two_k3]
    g0 = Graph.empty(0)
    for p in parts:
        g0 = g0.disjoint_union(p)
    v1, v2, v3, v4, v5 = (list(range(6 * i, 6 * i + 6)) for i in range(5))
    v5a, v5b = v5[:2], v5[2:]
    rows = list(g0.adj)
    for a, b in ((v1, v2), (v1, v5a), (v2, v5a), (v3, v4), (v3, v5b), (v4, v5b)):
        _join_blocks(30, rows, a, b)
    g = Graph(30, tuple(rows))
    expected = [(6, 2 + 8), (6, 3 + 8), (6, 2 + 10), (6, 3 + 10), (6, 2 + 12)]
    return _report("paw30", g, expected, "PAW", "PAW", params={"split": [2, 4]})


def build_c4_23() -> ConstructionReport:
    """Bull[K3, C5, C5, C5, C5] with the triangle class on a degree-3 bull vertex."""
    host = build(BULL)
    parts = [build(Kn(3))] + [regular_graph(5, 2)] * 4
    g = substitute(host, parts)
    return _report("c4-23", g, substitution_classes(host, parts), "C4", "C4")


def build_theorem2(n: int) -> ConstructionReport:
    """(n-1)^2 vertices in n-1 regular classes of size n-1 with distinct degrees.

    No n-set is singular: it meets some class twice but cannot fit in one.
    """
    if n < 3:
        raise GraphError("theorem2 needs n >= 3")
    m = n - 1
    if m * m > MAX_ORDER:
        raise GraphError(f"order {m * m} exceeds {MAX_ORDER}")
    internal: list[int]
    matched: list[tuple[int, int]] = []
    if m % 2 == 0:
        internal = list(range(m))
        case = "even"
    else:
        odd_low = sum(1 for i in range(m) if i % 2)  # odd terms of 0..m-1
        if odd_low % 2 == 0:
            internal = [2 * (i // 2) for i in range(m)]
            matched = [(i, i + 2) for i in range(1, m - 2, 4)]
            case = "0..n-2"
        else:
            internal = [2 * ((i + 1) // 2) for i in range(m)]
            matched = [(i, i + 2) for i in range(0, m - 1, 4)]
            case = "1..n-1"
    parts = [regular_graph(m, d) for d in internal]
    g0 = Graph.empty(0)
    for p in parts:
        g0 = g0.disjoint_union(p)
    rows = list(g0.adj)
    degs = list(internal)
    for a, b in matched:
        for t in range(m):
            x, y = a * m + t, b * m + t
            rows[x] |= 1 << y
            rows[y] |= 1 << x
        degs[a] += 1
        degs[b] += 1
    g = Graph(m * m, tuple(rows))
    pat = f"{n}K1"
    return _report("theorem2", g, [(m, d) for d in degs], pat, pat, params={"n": n, "case": case})


def build_star_even(s: int) -> ConstructionReport:
    """Classes A_i, B_i (i < s) of size 2s-2 for even s."""
    if s < 2 or s % 2:
        raise GraphError("build_star_even needs even s >= 2")
    L = 2 * s - 2
    if L * L > MAX_ORDER:
        raise GraphError(f"order {L * L} exceeds {MAX_ORDER}")
    r = s - 1
    a_blocks = [list(range(i * L, (i + 1) * L)) for i in range(r)]
    b_blocks = [list(range((r + i) * L, (r + i + 1) * L)) for i in range(r)]
    g0 = Graph.empty(0)
    for _ in range(r):
        g0 = g0.disjoint_union(regular_graph(L, s - 2))
    for _ in range(r):
        g0 = g0.disjoint_union(regular_graph(L, s - 1))
    rows = list(g0.adj)
    for i in range(r):
        for j in range(r):
            if i != j:
                _join_blocks(L * L, rows, a_blocks[i], b_blocks[j])
        bip = regular_bipartite(L, 2 * (i + 1))
        for u, v in bip.edges():
            x, y = a_blocks[i][u], b_blocks[i][v - L]
            rows[x] |= 1 << y
            rows[y] |= 1 << x
    g = Graph(L * L, tuple(rows))
    base = (r - 1) * L
    expected = [(L, s - 2 + base + 2 * (i + 1)) for i in range(r)]
    expected += [(L, s - 1 + base + 2 * (i + 1)) for i in range(r)]
    star = f"K1,{s}"
    return _report("star-even", g, expected, star, star, params={"s": s})


def _power_cycle(length: int, t: int) -> Graph:
    return Graph.from_edges(
        length, {tuple(sorted((i, (i + j) % length))) for i in range(length) for j in range(1, t + 1)}
    )


def build_star_odd(s: int) -> ConstructionReport:
    """Substitution into the t-th power of C_{4t+1}, s = 2t+1.

    Class V_i replaces x_i: V_1..V_{2t+1} are 2t-regular on 4t+1 vertices,
    V_{2t+2}..V_{3t+1} are (2t-1)-regular on 4t, V_{3t+2}..V_{4t} are
    2t-regular on 4t, and V_0 is t-regular on 2t.
    """
    if s < 3 or s % 2 == 0:
        raise GraphError("build_star_odd needs odd s >= 3")
    t = (s - 1) // 2
    L = 4 * t + 1
    parts: list[Graph] = []
    for i in range(L):
        if i == 0:
            parts.append(regular_graph(2 * t, t))
        elif i <= 2 * t + 1:
            parts.append(regular_graph(4 * t + 1, 2 * t))
        elif i <= 3 * t + 1:
            parts.append(regular_graph(4 * t, 2 * t - 1))
        else:
            parts.append(regular_graph(4 * t, 2 * t))
    host = _power_cycle(L, t)
    g = substitute(host, parts)
    star = f"K1,{s}"
    return _report("star-odd", g, substitution_classes(host, parts), star, star, params={"s": s})


def build_star_odd_alt(q: int) -> ConstructionReport:
    """Second construction for s = 4q+1, substituted into the 2q-th power of C_{8q+1}."""
    if q < 1:
        raise GraphError("q must be positive")
    s = 4 * q + 1
    L = 8 * q + 1
    spec: dict[int, tuple[int, int]] = {}
    for i in range(2 * q, 6 * q + 1):
        spec[i] = (8 * q + 1, s - 1)
    for i in range(1, q + 1):
        for idx in ((4 * q + 2 * q + 2 * i) % L, (4 * q - 2 * q - 2 * i) % L):
            spec[idx] = (8 * q, s - 2)
        for idx in ((4 * q + 2 * q + 2 * i - 1) % L, (4 * q - 2 * q - 2 * i + 1) % L):
            spec[idx] = (8 * q - 2, s - 2)
    spec[8 * q] = (8 * q - 2, s - 3)
    spec[2 * q - 1] = (8 * q, s - 1)
    if sorted(spec) != list(range(L)):
        raise AssertionError("class index rules do not cover every host vertex")
    parts = [regular_graph(*spec[i]) for i in range(L)]
    host = _power_cycle(L, 2 * q)
    g = substitute(host, parts)
    star = f"K1,{s}"
    return _report("star-alt", g, substitution_classes(host, parts), star, star, params={"q": q})


# singular Turan constructions ------------------------------------------------------


def irregular_weighting(m: int, node_limit: int = 2_000_000) -> dict[tuple[int, int], int]:
    """Weights in {1,2,3} on the edges of K_m with distinct weighted degrees."""
    if m < 3:
        raise ValueError("irregular weightings of K_m need m >= 3")
    if m > 12:
        raise ValueError("irregular weighting search is limited to m <= 12")
    edges = list(combinations(range(m), 2))
    # vertex v is complete once its last edge (in this order) is set
    last = {}
    for idx, (a, b) in enumerate(edges):
        last[a] = idx
        last[b] = idx
    closing = [[v for v in range(m) if last[v] == idx] for idx in range(len(edges))]
    weights = [0] * len(edges)
    wdeg = [0] * m
    used: set[int] = set()
    nodes = 0

    def rec(idx: int) -> bool:
        nonlocal nodes
        if idx == len(edges):
            return True
        a, b = edges[idx]
        for w in (1, 2, 3):
            nodes += 1
            if nodes > node_limit:
                raise RuntimeError("irregular weighting search bound exceeded")
            weights[idx] = w
            wdeg[a] += w
            wdeg[b] += w
            fresh = [wdeg[v] for v in closing[idx]]
            if len(set(fresh)) == len(fresh) and not used.intersection(fresh):
                used.update(fresh)
                if rec(idx + 1):
                    return True
                used.difference_update(fresh)
            wdeg[a] -= w
            wdeg[b] -= w
        return False

    if not rec(0):
        raise RuntimeError("no irregular weighting found")
    return dict(zip(edges, weights))


def _multipartite(sizes: Sequence[int]) -> tuple[Graph, list[list[int]]]:
    parts = []
    off = 0
    for s in sizes:
        parts.append(list(range(off, off + s)))
        off += s
    part_of = {v: i for i, p in enumerate(parts) for v in p}
    edges = [(u, v) for u, v in combinations(range(off), 2) if part_of[u] != part_of[v]]
    return Graph.from_edges(off, edges), parts


def _default_turan_pattern(p: int, q: int) -> str:
    if q < 2 or p < q:
        raise GraphError("need p >= q >= 2")
    core = f"K{q}" if q < 10 else f"K({q})"
    return core if p == q else f"{core}+{p - q}K1"


def c1_part_sizes(n: int, p: int, q: int) -> list[int]:
    """u_1 < ... < u_{p-1}: part size of each class, smallest maximised."""
    if q < 2 or p < 2:
        raise GraphError("need p, q >= 2")
    if n % (q - 1):
        raise GraphError(f"{q - 1} must divide n={n}")
    total = n // (q - 1)
    c = p - 1
    base = total - c * (c - 1) // 2
    u1 = base // c
    extra = base - c * u1
    if u1 < 1:
        raise GraphError(f"n={n} too small for the construction with p={p}, q={q}")
    return [u1 + i + (1 if i >= c - extra else 0) for i in range(c)]


def build_turan_c1(n: int, p: int, q: int, pattern: str | None = None) -> ConstructionReport:
    """p-1 classes, class i a balanced complete (q-1)-partite graph with parts u_i."""
    sizes = c1_part_sizes(n, p, q)
    parts = [u for u in sizes for _ in range(q - 1)]
    g, _ = _multipartite(parts)
    expected = [((q - 1) * u, n - u) for u in sizes]
    pat = pattern or _default_turan_pattern(p, q)
    return _report("turan-c1", g, expected, pat, None, params={"n": n, "p": p, "q": q, "parts": sizes})


def build_turan_c2(n: int, p: int, q: int, pattern: str | None = None) -> ConstructionReport:
    """Equal parts; between classes remove a matching (weight 2) or 2-factor (weight 3)."""
    if p < 4 or q < 2:
        raise GraphError("build_turan_c2 needs p >= 4 and q >= 2")
    c = p - 1
    if n % (c * (q - 1)):
        raise GraphError(f"{c * (q - 1)} must divide n={n}")
    u = n // (c * (q - 1))
    L = u * (q - 1)
    weights = irregular_weighting(c)
    if L < 2 and 3 in weights.values():
        raise GraphError("classes too small for a 2-factor")
    g0, _ = _multipartite([u] * (c * (q - 1)))
    rows = list(g0.adj)
    classes = [list(range(i * L, (i + 1) * L)) for i in range(c)]

    def drop(x: int, y: int) -> None:
        rows[x] &= ~(1 << y)
        rows[y] &= ~(1 << x)

    for (a, b), w in weights.items():
        A, B = classes[a], classes[b]
        if w >= 2:
            for t in range(L):
                drop(A[t], B[t])
        if w == 3:
            for t in range(L):
                if (t + 1) % L != t:
                    drop(A[t], B[(t + 1) % L])
    g = Graph(n, tuple(rows))
    wdeg = [sum(w for e, w in weights.items() if i in e) for i in range(c)]
    expected = [(L, n - u - (wdeg[i] - (c - 1))) for i in range(c)]
    pat = pattern or _default_turan_pattern(p, q)
    params = {"n": n, "p": p, "q": q, "weights": {f"{a}-{b}": w for (a, b), w in weights.items()}}
    return _report("turan-c2", g, expected, pat, None, params=params)


def build_trian(n: int) -> ConstructionReport:
    """Singular-triangle-free graphs by residue of n mod 4."""
    if n < 4:
        raise GraphError("build_trian needs n >= 4")
    h, r = divmod(n, 4)
    if r == 0:
        sizes = [h - 1, h - 1, h + 1, h + 1]
        g, _ = _multipartite(sizes)
        expected = [(2 * s, n - s) for s in (h - 1, h + 1) if s > 0]
    elif r == 2:
        sizes = [h, h, h + 1, h + 1]
        g, _ = _multipartite(sizes)
        expected = [(2 * s, n - s) for s in (h, h + 1)]
    else:
        # r == 1: K_{h,h,h,h}; r == 3: parts h,h,h+1,h+1; then z joins the two first parts
        sizes = [h, h, h, h] if r == 1 else [h, h, h + 1, h + 1]
        base, parts = _multipartite(sizes)
        g = base.add_vertex(parts[0] + parts[1])
        m = n - 1
        if r == 1:
            expected = [(2 * h, m - h + 1), (2 * h, m - h), (1, 2 * h)]
        else:
            expected = [(2 * h, m - h + 1), (2 * h + 2, m - h - 1), (1, 2 * h)]
    return _report("trian", g, expected, "K3", None, params={"n": n})


# registry ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BuilderInfo:
    func: Callable[..., ConstructionReport]
    params: tuple[str, ...]
    summary: str


BUILDERS: dict[str, BuilderInfo] = {
    "hk": BuilderInfo(build_hk, ("k",), "H(k): SR for (P3,P3) with parameter k"),
    "sr2k2": BuilderInfo(build_sr_2k2, (), "12 vertices, SR for 2K2 and P4"),
    "k3-21": BuilderInfo(build_k3_21, (), "C5[C5,C5,C5,2K2,K2], SR for K3 and K1,3"),
    "k3claw28": BuilderInfo(build_k3_claw_28, (), "28 vertices, SR for (K3,K1,3)"),
    "paw30": BuilderInfo(build_paw_30, (), "30 vertices, SR for the paw"),
    "c4-23": BuilderInfo(build_c4_23, (), "Bull[K3,C5,C5,C5,C5], SR for C4"),
    "theorem2": BuilderInfo(build_theorem2, ("n",), "(n-1)^2 vertices with no singular n-set"),
    "star-even": BuilderInfo(build_star_even, ("s",), "(2s-2)^2 vertices, SR for K1,s, s even"),
    "star-odd": BuilderInfo(build_star_odd, ("s",), "(2s-1)(2s-2)+1 vertices, SR for K1,s, s odd"),
    "star-alt": BuilderInfo(build_star_odd_alt, ("q",), "alternative for s=4q+1"),
    "turan-c1": BuilderInfo(build_turan_c1, ("n", "p", "q"), "singular Turan construction 1"),
    "turan-c2": BuilderInfo(build_turan_c2, ("n", "p", "q"), "singular Turan construction 2"),
    "trian": BuilderInfo(build_trian, ("n",), "singular-triangle-free graph by n mod 4"),
}


def run_builder(name: str, **params: int) -> ConstructionReport:
    info = BUILDERS.get(name)
    if info is None:
        raise KeyError(f"unknown builder {name!r}")
    missing = [p for p in info.params if params.get(p) is None]
    if missing:
        raise GraphError(f"builder {name} needs parameters: {', '.join(missing)}")
    return info.func(**{p: params[p] for p in info.params})


__all__ = [
    "BUILDERS",
    "ConstructionReport",
    "build_c4_23",
    "build_hk",
    "build_k3_21",
    "build_k3_claw_28",
    "build_paw_30",
    "build_sr_2k2",
    "build_star_even",
    "build_star_odd",
    "build_star_odd_alt",
    "build_theorem2",
    "build_trian",
    "build_turan_c1",
    "build_turan_c2",
    "irregular_weighting",
    "regular_bipartite",
    "regular_graph",
    "run_builder",
    "substitute",
    "substitution_classes",
]
