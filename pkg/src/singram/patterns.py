"""Named pattern graphs and a small textual pattern language.

Vertex orderings produced by :func:`build` are fixed:

* ``K(n)``: ``0..n-1``.
* ``K(p,q)``: side one is ``0..p-1``, side two is ``p..p+q-1``.
* ``P(n)``: the path ``0-1-...-(n-1)``; ``C(n)`` adds ``(n-1)-0``.
* ``Star(s)``: centre ``0`` and leaves ``1..s`` (this is ``K(1,s)``).
* ``Matching(m)``: edges ``(2i, 2i+1)``.
* ``Paw``: triangle ``0,1,2`` with pendant ``3`` on ``0``.
* ``Bull``: triangle ``0,1,2`` with pendants ``3`` on ``0`` and ``4`` on ``2``.
* Unions list the left operand's vertices first.

Text grammar (case-insensitive)::

    spec  := term ('+' term)*
    term  := [count] atom
    atom  := 'K' digit             complete graph K_n
           | 'K' digit digit       complete bipartite K_{p,q}, e.g. K13 = K_{1,3}
           | 'K' int ',' int       complete bipartite, e.g. K1,7
           | 'K(' int ')'          complete graph of any order
           | 'P' int | 'C' int     path, cycle
           | 'S' int               star K_{1,s}
           | 'E' int               edgeless graph
           | 'PAW' | 'BULL'

A leading count gives disjoint copies: ``2K2``, ``3K1``, ``2K3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .graph import MAX_ORDER, Graph, GraphError


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class GraphSpec:
    tag: str
    args: tuple = ()

    def __str__(self) -> str:
        t, a = self.tag, self.args
        if t == "K":
            return f"K{a[0]}" if a[0] < 10 else f"K({a[0]})"
        if t == "KPQ":
            p, q = a
            return f"K{p}{q}" if p < 10 and q < 10 else f"K{p},{q}"
        if t == "P":
            return f"P{a[0]}"
        if t == "C":
            return f"C{a[0]}"
        if t == "STAR":
            return f"K1,{a[0]}" if a[0] >= 10 else f"K1{a[0]}"
        if t == "MATCHING":
            return f"{a[0]}K2"
        if t == "EMPTY":
            return f"{a[0]}K1"
        if t == "PAW":
            return "PAW"
        if t == "BULL":
            return "BULL"
        if t == "COPIES":
            return f"{a[0]}{a[1]}"
        if t == "UNION":
            return f"{a[0]}+{a[1]}"
        raise PatternError(f"unknown tag {t}")


def Kn(n: int) -> GraphSpec:
    return GraphSpec("K", (n,))


def Kpq(p: int, q: int) -> GraphSpec:
    return GraphSpec("KPQ", (p, q))


def Pn(n: int) -> GraphSpec:
    return GraphSpec("P", (n,))


def Cn(n: int) -> GraphSpec:
    return GraphSpec("C", (n,))


def Star(s: int) -> GraphSpec:
    return GraphSpec("STAR", (s,))


def Matching(m: int) -> GraphSpec:
    return GraphSpec("MATCHING", (m,))


def EmptyN(n: int) -> GraphSpec:
    return GraphSpec("EMPTY", (n,))


PAW = GraphSpec("PAW")
BULL = GraphSpec("BULL")


def Union(a: GraphSpec, b: GraphSpec) -> GraphSpec:
    return GraphSpec("UNION", (a, b))


def _check_order(n: int) -> None:
    if n < 0 or n > MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")


def build(spec: GraphSpec) -> Graph:
    t, a = spec.tag, spec.args
    if t == "K":
        _check_order(a[0])
        return Graph.from_edges(a[0], combinations(range(a[0]), 2))
    if t == "KPQ":
        p, q = a
        _check_order(p + q)
        return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])
    if t == "P":
        _check_order(a[0])
        return Graph.from_edges(a[0], [(i, i + 1) for i in range(a[0] - 1)])
    if t == "C":
        n = a[0]
        if n < 3:
            raise PatternError("cycles need at least 3 vertices")
        _check_order(n)
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if t == "STAR":
        _check_order(a[0] + 1)
        return Graph.from_edges(a[0] + 1, [(0, i) for i in range(1, a[0] + 1)])
    if t == "MATCHING":
        _check_order(2 * a[0])
        return Graph.from_edges(2 * a[0], [(2 * i, 2 * i + 1) for i in range(a[0])])
    if t == "EMPTY":
        _check_order(a[0])
        return Graph.empty(a[0])
    if t == "PAW":
        return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    if t == "BULL":
        return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (2, 4)])
    if t == "COPIES":
        m, inner = a
        g = build(inner)
        out = Graph.empty(0)
        for _ in range(m):
            out = out.disjoint_union(g)
        return out
    if t == "UNION":
        left, right = build(a[0]), build(a[1])
        _check_order(left.n + right.n)
        return left.disjoint_union(right)
    raise PatternError(f"unknown tag {t}")


_TERM = re.compile(
    r"""^(?P<count>\d+)?
        (?: (?P<paw>PAW) | (?P<bull>BULL)
          | K\((?P<kbig>\d+)\)
          | K(?P<kp>\d+),(?P<kq>\d+)
          | K(?P<kdig>\d{1,2})
          | (?P<kind>[PCSE])(?P<num>\d+)
        )$""",
    re.VERBOSE,
)


def _parse_term(text: str) -> GraphSpec:
    m = _TERM.match(text)
    if not m:
        raise PatternError(f"cannot parse pattern term {text!r}")
    if m["paw"]:
        atom = PAW
    elif m["bull"]:
        atom = BULL
    elif m["kbig"]:
        atom = Kn(int(m["kbig"]))
    elif m["kp"]:
        atom = _bipartite(int(m["kp"]), int(m["kq"]))
    elif m["kdig"]:
        d = m["kdig"]
        atom = Kn(int(d)) if len(d) == 1 else _bipartite(int(d[0]), int(d[1]))
    else:
        kind, num = m["kind"], int(m["num"])
        atom = {"P": Pn, "C": Cn, "S": Star, "E": EmptyN}[kind](num)
    count = m["count"]
    if count is None:
        return atom
    c = int(count)
    if c < 1:
        raise PatternError("copy count must be positive")
    if c == 1:
        return atom
    if atom == Kn(1):
        return EmptyN(c)
    if atom == Kn(2):
        return Matching(c)
    return GraphSpec("COPIES", (c, atom))


def _bipartite(p: int, q: int) -> GraphSpec:
    if p == 1:
        return Star(q)
    return Kpq(p, q)


def parse_spec(text: str) -> GraphSpec:
    parts = [t.strip() for t in text.strip().upper().replace(" ", "").split("+")]
    if not parts or any(not t for t in parts):
        raise PatternError(f"empty pattern term in {text!r}")
    spec = _parse_term(parts[0])
    for t in parts[1:]:
        spec = Union(spec, _parse_term(t))
    return spec


def parse_pattern(text: str) -> Graph:
    return build(parse_spec(text))


def pattern_name(text: str) -> str:
    return str(parse_spec(text))
