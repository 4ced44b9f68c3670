"""Singular Turán numbers: exact values for small n, constructive lower bounds
and gap tables against the classical Turán function."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .canon import canonical_form
from .constructions import build_trian, build_turan_c1, build_turan_c2, c1_part_sizes
from .enumeration import sweep_ts
from .graph import Graph, GraphError
from .patterns import parse_pattern
from .singular import find_singular_copy

EXHAUSTIVE = "exhaustive"
CONSTRUCTION = "construction-lower-only"


def turan_number(n: int, s: int) -> int:
    """ex(n, K_s): edges of the balanced complete (s-1)-partite graph on n vertices."""
    if s < 2:
        raise ValueError("s must be at least 2")
    if n < 0:
        raise ValueError("n must be non-negative")
    parts = s - 1
    q, r = divmod(n, parts)
    sizes = [q + 1] * r + [q] * (parts - r)
    return (n * n - sum(x * x for x in sizes)) // 2


def chromatic_number(g: Graph) -> int:
    """Smallest number of colours in a proper colouring (brute force, small graphs)."""
    if g.n == 0:
        return 0
    for q in range(1, g.n + 1):
        colour = [-1] * g.n

        def rec(v: int) -> bool:
            if v == g.n:
                return True
            used = {colour[u] for u in g.neighbors(v) if colour[u] >= 0}
            # symmetry: a vertex never opens more than one new colour
            top = max(colour[:v], default=-1) + 1
            for c in range(min(q, top + 1)):
                if c not in used:
                    colour[v] = c
                    if rec(v + 1):
                        return True
            colour[v] = -1
            return False

        if rec(0):
            return q
    return g.n


@dataclass
class TsResult:
    n: int
    pattern: str
    k: int
    value: int
    witnesses: list[str] = field(default_factory=list)
    method: str = EXHAUSTIVE
    source: str = ""
    examined: int = 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern": self.pattern,
            "k": self.k,
            "value": self.value,
            "method": self.method,
            "source": self.source,
            "witnesses": list(self.witnesses),
        }


def _name(pattern: Graph | str) -> tuple[Graph, str]:
    if isinstance(pattern, str):
        return parse_pattern(pattern), pattern
    return pattern, pattern.to_graph6()


def ts_exact(n: int, pattern: Graph | str, k: int = 1) -> TsResult:
    """Maximum edge count over all graphs of order n with no k-singular copy."""
    g, name = _name(pattern)
    value, graphs, examined = sweep_ts(n, g, k)
    wit = sorted({canonical_form(w) for w in graphs})
    for w in graphs:
        assert w.num_edges == value and find_singular_copy(w, g, k) is None
    return TsResult(n, name, k, value, wit, EXHAUSTIVE, "sweep", examined)


def _pad(g: Graph, n: int) -> Graph:
    while g.n < n:
        g = g.add_vertex(())
    return g


def _candidates(n: int, p: int, q: int, is_k3: bool) -> Iterable[tuple[str, Graph]]:
    if is_k3 and n >= 4:
        yield "trian", build_trian(n).graph
    if q >= 2 and p >= 2:
        m = n - n % (q - 1)
        while m > 0:
            try:
                c1_part_sizes(m, p, q)
            except GraphError:
                m -= q - 1
                continue
            yield f"turan-c1({m})", _pad(build_turan_c1(m, p, q).graph, n)
            break
    if p >= 4 and q >= 2:
        step = (p - 1) * (q - 1)
        m = n - n % step
        if m > 0:
            try:
                yield f"turan-c2({m})", _pad(build_turan_c2(m, p, q).graph, n)
            except GraphError:
                pass


def ts_lower(n: int, pattern: Graph | str, k: int = 1) -> TsResult:
    """Best verified construction; value -1 when no builder applies."""
    g, name = _name(pattern)
    p, q = g.n, chromatic_number(g)
    is_k3 = canonical_form(g) == canonical_form(parse_pattern("K3"))
    best: tuple[int, str, Graph] | None = None
    for src, h in _candidates(n, p, q, is_k3):
        if find_singular_copy(h, g, k) is not None:
            continue
        e = h.num_edges
        if best is None or e > best[0]:
            best = (e, src, h)
    if best is None:
        return TsResult(n, name, k, -1, [], CONSTRUCTION, "none")
    e, src, h = best
    return TsResult(n, name, k, e, [h.to_graph6()], CONSTRUCTION, src)


def k3_bracket(n: int) -> tuple[Fraction, Fraction]:
    """Closed interval known to contain Ts(n, K3) for n >= 3, by n mod 4."""
    x = Fraction(3, 8) * n * n
    r = n % 4
    if r == 0:
        return x - 2, x - 1
    if r == 1:
        return x - Fraction(n, 4) - Fraction(1, 8), x - Fraction(11, 8)
    if r == 2:
        return x - Fraction(1, 2), x - Fraction(1, 2)
    return x - Fraction(n, 4) - Fraction(13, 8), x - Fraction(11, 8)


@dataclass
class GapRow:
    n: int
    turan: int  # ex(n, K_{(p-1)(q-1)+1})
    lower: int
    gap: int | None
    bound: float
    status: str  # "ok", "exceeds", "degenerate"
    source: str

    def to_dict(self) -> dict:
        return self.__dict__.copy()


def ts_gap_report(pattern: Graph | str, ns: Sequence[int], c: float = 1.0, k: int = 1) -> list[GapRow]:
    """Gap between the Turán reference ex(n, K_{(p-1)(q-1)+1}) and the best construction.

    Rows where n is a multiple of q-1 are held to c*q*p^3; otherwise the
    allowance grows by r*n for residue r.  A row is "degenerate" when no
    construction applies at that n.
    """
    g, _ = _name(pattern)
    p, q = g.n, chromatic_number(g)
    if p < 3 or q < 2:
        raise ValueError("gap reports need a pattern with p >= 3 and chromatic number >= 2")
    s = (p - 1) * (q - 1) + 1
    rows = []
    for n in ns:
        ex = turan_number(n, s)
        low = ts_lower(n, g, k)
        r = n % (q - 1)
        bound = c * q * p**3 + r * n
        if low.value < 0:
            rows.append(GapRow(n, ex, -1, None, bound, "degenerate", "none"))
            continue
        gap = ex - low.value
        rows.append(GapRow(n, ex, low.value, gap, bound, "ok" if gap <= bound else "exceeds", low.source))
    return rows


CSV_FIELDS = ("n", "k", "pattern", "value", "method", "witness_count")


def write_ts_csv(results: Sequence[TsResult], path: str | Path) -> Path:
    path = Path(path)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_FIELDS)
        for r in results:
            w.writerow([r.n, r.k, r.pattern, r.value, r.method, len(r.witnesses)])
    return path


def write_gap_csv(rows: Sequence[GapRow], path: str | Path) -> Path:
    path = Path(path)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "turan", "lower", "gap", "bound", "status", "source"])
        for r in rows:
            w.writerow([r.n, r.turan, r.lower, "" if r.gap is None else r.gap, r.bound, r.status, r.source])
    return path


def contains_turan_graph(g: Graph, parts: int) -> bool:
    """Whether g contains the balanced complete ``parts``-partite graph on g.n vertices."""
    from .constructions import _multipartite
    from .singular import contains_subgraph

    q, r = divmod(g.n, parts)
    t, _ = _multipartite([q + 1] * r + [q] * (parts - r))
    return contains_subgraph(g, t)


__all__ = [
    "GapRow",
    "TsResult",
    "chromatic_number",
    "contains_turan_graph",
    "k3_bracket",
    "ts_exact",
    "ts_gap_report",
    "ts_lower",
    "turan_number",
    "write_gap_csv",
    "write_ts_csv",
]
