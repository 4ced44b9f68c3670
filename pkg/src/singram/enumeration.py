"""Isomorph-free generation, R-graph catalogues, Ramsey numbers and stability.

Generation is canonical augmentation: every graph of order ``n`` is obtained
exactly once by adding a vertex to a representative of order ``n-1``.  The
compiled kernel in :mod:`singram._kernel` does the heavy lifting.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterator

import numpy as np

from . import _kernel
from .canon import canonical_form
from .graph import Graph
from .singular import is_rgraph, plan_pattern

GENERATOR_VERSION = "augment-1"
MAX_GENERATION_ORDER = 10
# orders whose full level arrays are kept in memory
_CACHED_LEVELS = 9
_CHUNK = 4096


class GenerationLimitError(ValueError):
    pass


_EMPTY = np.zeros(0, np.int64)


def kernel_plan(pattern: Graph | None) -> tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    """Pattern plan packed as arrays for the kernel."""
    if pattern is None:
        return _EMPTY, _EMPTY, _EMPTY, 0
    plan = plan_pattern(pattern)
    req = np.array([sum(1 << t for t in ts) for ts in plan.req], np.int64)
    return (
        np.array(plan.order, np.int64),
        req,
        np.array(plan.twin, np.int64),
        plan.p,
    )


def rows_of(g: Graph) -> np.ndarray:
    return np.array(g.adj, np.int64)


def graph_of(rows: np.ndarray) -> Graph:
    return Graph(len(rows), tuple(int(r) for r in rows))


def _run(parents: np.ndarray, m: int, mode: int, k: int = 1, f1=None, f2=None, floor: int = 0):
    o1, r1, t1, p1 = kernel_plan(f1)
    o2, r2, t2, p2 = kernel_plan(f2)
    out, nout, accepted, best, status = _kernel.gen_level(
        parents, m, mode, k, o1, r1, t1, p1, o2, r2, t2, p2, floor
    )
    if status == 2:
        raise RuntimeError("automorphism generator store overflowed")
    return out[:nout], int(accepted), int(best), int(status)


@lru_cache(maxsize=None)
def _level(n: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), np.int64)
    rows, _, _, _ = _run(_level(n - 1), n - 1, _kernel.MODE_COLLECT)
    rows.setflags(write=False)
    return rows


def _chunks(parents: np.ndarray) -> Iterator[np.ndarray]:
    for s in range(0, len(parents), _CHUNK):
        yield parents[s : s + _CHUNK]


def _check_order(n: int) -> None:
    if n < 0 or n > MAX_GENERATION_ORDER:
        raise GenerationLimitError(f"generation supports orders 0..{MAX_GENERATION_ORDER}, got {n}")


def generate_rows(n: int) -> Iterator[np.ndarray]:
    """Blocks of adjacency rows covering every graph of order ``n`` once."""
    _check_order(n)
    if n <= _CACHED_LEVELS:
        yield _level(n)
        return
    for block in _chunks(_level(n - 1)):
        rows, _, _, _ = _run(block, n - 1, _kernel.MODE_COLLECT)
        yield rows


def generate_all(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class of order ``n``, in a fixed order."""
    for block in generate_rows(n):
        for rows in block:
            yield graph_of(rows)


def count_graphs(n: int) -> int:
    return sum(len(b) for b in generate_rows(n))


@dataclass
class SweepResult:
    n: int
    graphs: int
    witness: Graph | None


def sweep_sr(n: int, f1: Graph, f2: Graph, k: int = 1) -> SweepResult:
    """Scan every graph of order ``n`` for an SR-graph; stop at the first."""
    _check_order(n)
    if n <= 1 or n > _kernel.KERNEL_MAX_ORDER:
        raise GenerationLimitError("sweeps need 2 <= n <= 10")
    total = 0
    for block in _chunks(_level(n - 1)):
        out, accepted, _, status = _run(block, n - 1, _kernel.MODE_SR_SWEEP, k, f1, f2)
        total += accepted
        if status == 1:
            return SweepResult(n, total, graph_of(out[0]))
    return SweepResult(n, total, None)


def sweep_ts(n: int, pattern: Graph, k: int = 1) -> tuple[int, list[Graph], int]:
    """Maximum edge count over graphs of order ``n`` with no k-singular copy.

    Returns (value, extremal graphs, graphs examined).  Value is -1 when
    every graph contains a singular copy.
    """
    _check_order(n)
    if n > 9:
        raise GenerationLimitError("exact singular Turan sweeps support n <= 9")
    if n <= 1:
        g = Graph.empty(n)
        from .singular import find_singular_copy

        ok = find_singular_copy(g, pattern, k) is None
        return (0, [g], 1) if ok else (-1, [], 1)
    best = 0
    witnesses: list[np.ndarray] = []
    examined = 0
    for block in _chunks(_level(n - 1)):
        out, accepted, bval, _ = _run(block, n - 1, _kernel.MODE_TS_SWEEP, k, pattern, None, best)
        examined += accepted
        if len(out) == 0:
            continue
        if bval > best or not witnesses:
            best = bval
            witnesses = [r.copy() for r in out]
        elif bval == best:
            witnesses.extend(r.copy() for r in out)
    if not witnesses:
        return -1, [], examined
    return best, [graph_of(r) for r in witnesses], examined


# R-graphs -----------------------------------------------------------------------


def _pattern_key(f: Graph) -> str:
    return canonical_form(f)


@dataclass
class RGraphCatalog:
    order: int
    f1: Graph
    f2: Graph
    graphs: list[Graph] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)

    def write(self, stem: str | Path, names: tuple[str, str] | None = None) -> tuple[Path, Path]:
        """Write ``stem.g6`` and the ``stem.json`` sidecar."""
        stem = Path(stem)
        g6 = stem.with_suffix(".g6")
        side = stem.with_suffix(".json")
        g6.write_text("".join(g.to_graph6() + "\n" for g in self.graphs))
        meta = {
            "order": self.order,
            "patterns": list(names) if names else [self.f1.to_graph6(), self.f2.to_graph6()],
            "patternGraph6": [self.f1.to_graph6(), self.f2.to_graph6()],
            "count": len(self.graphs),
            "generatorVersion": GENERATOR_VERSION,
        }
        side.write_text(json.dumps(meta, indent=2) + "\n")
        return g6, side

    @classmethod
    def read(cls, stem: str | Path) -> RGraphCatalog:
        stem = Path(stem)
        meta = json.loads(stem.with_suffix(".json").read_text())
        f1, f2 = (Graph.from_graph6(t) for t in meta["patternGraph6"])
        graphs = [Graph.from_graph6(line) for line in stem.with_suffix(".g6").read_text().split()]
        if len(graphs) != meta["count"]:
            raise ValueError("catalog count does not match sidecar")
        return cls(meta["order"], f1, f2, graphs)


@lru_cache(maxsize=64)
def _rgraph_level(n: int, f1: Graph, f2: Graph) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), np.int64)
    parents = _rgraph_level(n - 1, f1, f2)
    if len(parents) == 0:
        return np.zeros((0, n), np.int64)
    rows, _, _, _ = _run(parents, n - 1, _kernel.MODE_RGRAPHS, 1, f1, f2)
    rows.setflags(write=False)
    return rows


def enumerate_r_graphs(n: int, f1: Graph, f2: Graph) -> RGraphCatalog:
    """All graphs of order ``n`` that are ``f1``-free with ``f2``-free complement."""
    _check_order(n)
    if max(f1.n, f2.n) > _kernel.KERNEL_MAX_ORDER:
        raise GenerationLimitError("patterns too large for the kernel")
    rows = _rgraph_level(n, f1, f2)
    graphs = [graph_of(r) for r in rows]
    for g in graphs:
        if not is_rgraph(g, f1, f2):
            raise AssertionError("kernel produced a graph that is not an R-graph")
    graphs.sort(key=canonical_form)
    return RGraphCatalog(n, f1, f2, graphs)


def ramsey_number(f1: Graph, f2: Graph, limit: int = MAX_GENERATION_ORDER) -> int:
    """Least n such that every graph of order n contains f1 or has f2 in its complement."""
    for n in range(1, limit + 1):
        if len(_rgraph_level(n, f1, f2)) == 0:
            if n + 1 <= limit and len(_rgraph_level(n + 1, f1, f2)) != 0:
                raise AssertionError("R-graph catalogue is not monotone")
            return n
    raise GenerationLimitError(f"Ramsey number exceeds the exhaustion bound {limit}")


@dataclass(frozen=True)
class VertexStability:
    vertex: int
    # neighbourhoods (as vertex tuples of h) whose re-attachment gives an R-graph
    extensions: tuple[tuple[int, ...], ...]
    original: tuple[int, ...]

    @property
    def stable(self) -> bool:
        return self.extensions == (self.original,)


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    vertices: tuple[VertexStability, ...]

    def offending(self) -> list[int]:
        return [vs.vertex for vs in self.vertices if not vs.stable]

    def to_dict(self) -> dict:
        return {
            "stable": self.stable,
            "vertices": [
                {
                    "vertex": vs.vertex,
                    "original": list(vs.original),
                    "extensions": [list(e) for e in vs.extensions],
                    "stable": vs.stable,
                }
                for vs in self.vertices
            ],
        }


def stability_report(h: Graph, f1: Graph, f2: Graph) -> StabilityReport:
    """Per-vertex re-attachment analysis of an R-graph ``h``.

    For each vertex v, every neighbourhood T inside V(h) - v is tried for a
    new vertex; v is stable when only T = N(v) yields an R-graph.
    """
    if not is_rgraph(h, f1, f2):
        raise ValueError("graph is not an R-graph for the given patterns")
    out = []
    for v in range(h.n):
        others = [u for u in range(h.n) if u != v]
        base = h.remove_vertex(v)
        good = []
        for mask in range(1 << len(others)):
            cand = base.add_vertex(i for i in range(len(others)) if mask >> i & 1)
            if is_rgraph(cand, f1, f2):
                good.append(tuple(others[i] for i in range(len(others)) if mask >> i & 1))
        out.append(VertexStability(v, tuple(good), tuple(h.neighbors(v))))
    return StabilityReport(all(vs.stable for vs in out), tuple(out))


def is_ramsey_stable(h: Graph, f1: Graph, f2: Graph) -> bool:
    return stability_report(h, f1, f2).stable
