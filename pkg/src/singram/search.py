"""Upper-bound machinery and end-to-end certification of singular Ramsey numbers.

Nonexistence of SR-graphs of order n is shown by one of four methods:

* ``exhaustive``: every graph of order n is generated and tested;
* ``profile-infeasible`` / ``trivial-bound``: no admissible class profile;
* ``substitution``: every SR-graph would have a Ramsey-stable transversal
  host, hence be a substitution of regular R-graphs, and none of those works;
* ``csp``: branch and prune over degree classes for whatever remains.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

import numpy as np

from . import _cspkernel
from .canon import canonical_form
from .constructions import build_theorem2, run_builder, substitute, substitution_classes
from .enumeration import (
    MAX_GENERATION_ORDER,
    enumerate_r_graphs,
    is_ramsey_stable,
    ramsey_number,
    sweep_sr,
)
from .graph import MAX_ORDER, Graph, GraphError
from .patterns import parse_pattern
from .singular import is_sr_graph
from ._version import __version__

SCHEMA_VERSION = 1
CSP_MAX_ORDER = 62
CSP_MAX_CLASSES = 7


@dataclass(frozen=True)
class SearchConfig:
    node_budget: int = 200_000_000
    time_budget: float = 600.0  # seconds per csp call
    jobs: int = 1
    seed: int = 0
    exhaustive_limit: int = 9

    def __post_init__(self):
        if self.node_budget <= 0 or self.time_budget <= 0:
            raise ValueError("budgets must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if not 0 <= self.exhaustive_limit <= MAX_GENERATION_ORDER:
            raise ValueError(f"exhaustive limit must lie in 0..{MAX_GENERATION_ORDER}")


@dataclass(frozen=True)
class ClassProfile:
    """Sizes of the degree classes, largest first."""

    sizes: tuple[int, ...]
    c_max: int
    s_max: int

    def __post_init__(self):
        if list(self.sizes) != sorted(self.sizes, reverse=True) or any(s < 1 for s in self.sizes):
            raise ValueError("sizes must be positive and non-increasing")
        if len(self.sizes) > self.c_max or (self.sizes and self.sizes[0] > self.s_max):
            raise ValueError("profile exceeds its class bounds")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def classes(self) -> int:
        return len(self.sizes)

    def __str__(self) -> str:
        return "+".join(map(str, self.sizes))


# bounds ----------------------------------------------------------------------------


def quadratic_upper_bound(f1: Graph, f2: Graph, k: int = 1) -> int:
    r = ramsey_number(f1, f2)
    return k * (r - 1) ** 2 + 1


def max_classes_bound(n: int, delta: int) -> int:
    """Degree-class count allowed when both F and its complement have min degree >= delta."""
    if delta < 0 or 2 * delta > n - 1:
        raise ValueError(f"need 0 <= delta <= (n-1)/2, got n={n}, delta={delta}")
    return n - 2 * delta


def _partitions(n: int, parts: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if parts == 0:
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, parts - 1, first):
            yield (first,) + rest


def class_profiles(n: int, f1: Graph, f2: Graph, k: int = 1) -> list[ClassProfile]:
    """Partitions of n into at most k(R-1) classes of size at most R-1.

    Within a class every copy is all-equal, so a class of R vertices would
    hold f1 or the complement's f2.  Across classes, any R classes whose
    degrees are pairwise k apart form a singular set; among c distinct
    degrees one can always pick ceil(c/k) of them spaced by k.
    """
    r = ramsey_number(f1, f2)
    c_max, s_max = k * (r - 1), r - 1
    return [ClassProfile(p, c_max, s_max) for p in _partitions(n, c_max, s_max)]


# catalogues and stability -----------------------------------------------------------


@lru_cache(maxsize=256)
def _catalog(s: int, f1: Graph, f2: Graph) -> tuple[Graph, ...]:
    return tuple(enumerate_r_graphs(s, f1, f2).graphs)


@lru_cache(maxsize=256)
def _regular_options(s: int, f1: Graph, f2: Graph) -> tuple[tuple[int, Graph], ...]:
    """(degree, representative) for each degree of a regular R-graph of order s."""
    seen: dict[int, Graph] = {}
    for g in _catalog(s, f1, f2):
        if g.is_regular():
            d = g.degrees()[0] if g.n else 0
            seen.setdefault(d, g)
    return tuple(sorted(seen.items()))


@lru_cache(maxsize=256)
def _stable(host: Graph, f1: Graph, f2: Graph) -> bool:
    return is_ramsey_stable(host, f1, f2)


# substitution -----------------------------------------------------------------------


@dataclass
class SubstitutionResult:
    n: int
    witness: Graph | None
    # (profile, host) pairs whose host is not Ramsey-stable
    uncovered: list[tuple[ClassProfile, Graph]] = field(default_factory=list)
    assignments: int = 0

    @property
    def covered(self) -> bool:
        return not self.uncovered


def _distinct_assignment(ext: Sequence[int], options: Sequence[Sequence[int]]) -> list[int] | None:
    c = len(ext)
    chosen: list[int] = []
    used: set[int] = set()

    def rec(i: int) -> bool:
        if i == c:
            return True
        for d in options[i]:
            total = ext[i] + d
            if total in used:
                continue
            used.add(total)
            chosen.append(d)
            if rec(i + 1):
                return True
            chosen.pop()
            used.discard(total)
        return False

    return chosen if rec(0) else None


def substitution_search(n: int, f1: Graph, f2: Graph, profiles: Sequence[ClassProfile] | None = None) -> SubstitutionResult:
    """Search the substitutions of regular R-graphs into stable hosts.

    Any SR-graph of order n with a Ramsey-stable transversal host is of this
    form.  Hosts that are not stable are reported in ``uncovered``.
    """
    if profiles is None:
        profiles = class_profiles(n, f1, f2)
    res = SubstitutionResult(n, None)
    for prof in profiles:
        c = prof.classes
        for host in _catalog(c, f1, f2):
            if not _stable(host, f1, f2):
                res.uncovered.append((prof, host))
                continue
            if res.witness is not None:
                continue
            res.witness = _substitute_into(host, prof, f1, f2, res)
    return res


def _substitute_into(host: Graph, prof: ClassProfile, f1: Graph, f2: Graph, res: SubstitutionResult) -> Graph | None:
    c = host.n
    for sizes in sorted(set(permutations(prof.sizes))):
        opts = [_regular_options(s, f1, f2) for s in sizes]
        if any(not o for o in opts):
            continue
        ext = [sum(sizes[j] for j in host.neighbors(i)) for i in range(c)]
        res.assignments += 1
        pick = _distinct_assignment(ext, [[d for d, _ in o] for o in opts])
        if pick is None:
            continue
        parts = [dict(o)[d] for o, d in zip(opts, pick)]
        classes = substitution_classes(host, parts)
        degs = [d for _, d in classes]
        assert len(set(degs)) == c, "substitution degree law violated"
        g = substitute(host, parts)
        assert is_sr_graph(g, f1, f2), "substitution produced a graph that is not SR"
        return g
    return None


# exhaustive ------------------------------------------------------------------------


def exhaustive_no_sr(n: int, f1: Graph, f2: Graph, k: int = 1) -> bool:
    return sweep_sr(n, f1, f2, k).witness is None


# csp ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    graph: Graph
    nodes: int = 0
    kind = "witness"


@dataclass(frozen=True)
class NoneExists:
    nodes: int = 0
    kind = "none"


@dataclass(frozen=True)
class BudgetExceeded:
    nodes: int = 0
    kind = "budget"


CspOutcome = Witness | NoneExists | BudgetExceeded


def _pair_index(c: int) -> np.ndarray:
    out = np.zeros((c, c), np.int64)
    for b in range(c):
        for a in range(b):
            out[a, b] = b * (b - 1) // 2 + a
    return out


def transversal_table(hosts: Sequence[Graph], c: int) -> tuple[np.ndarray, np.ndarray]:
    """Lookup of labelled graphs on m <= c vertices that embed induced in some host."""
    toff = np.zeros(c + 2, np.int64)
    for m in range(c + 1):
        toff[m + 1] = toff[m] + (1 << (m * (m - 1) // 2))
    table = np.zeros(int(toff[c + 1]), np.bool_)
    pidx = _pair_index(c)
    for h in hosts:
        if h.n != c:
            raise ValueError("host order does not match the class count")
        for m in range(c + 1):
            for arr in permutations(range(c), m):
                code = 0
                for b in range(m):
                    for a in range(b):
                        if h.has_edge(arr[a], arr[b]):
                            code |= 1 << int(pidx[a, b])
                table[toff[m] + code] = True
    return table, toff


def _twins(g: Graph, a: int, b: int) -> bool:
    bit = (1 << a) | (1 << b)
    return (g.adj[a] & ~bit) == (g.adj[b] & ~bit)


def _intra_choices(prof: ClassProfile, f1: Graph, f2: Graph) -> Iterator[tuple[int, ...]]:
    cats = [_catalog(s, f1, f2) for s in prof.sizes]
    sizes = prof.sizes

    def rec(i: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == len(sizes):
            yield acc
            return
        start = acc[-1] if i > 0 and sizes[i - 1] == sizes[i] else 0
        for x in range(start, len(cats[i])):
            yield from rec(i + 1, acc + (x,))

    if all(cats):
        yield from rec(0, ())


def csp_search(
    profile: ClassProfile,
    f1: Graph,
    f2: Graph,
    k: int = 1,
    cfg: SearchConfig | None = None,
    hosts: Sequence[Graph] | None = None,
) -> CspOutcome:
    """Branch and prune over graphs whose degree classes have the given sizes.

    Each class induces an R-graph from the catalogue.  For k = 1 every
    transversal must induce one of ``hosts`` (default: every R-graph of
    order c); for larger k only the final check sees the patterns.
    """
    cfg = cfg or SearchConfig()
    n, c = profile.n, profile.classes
    if n > CSP_MAX_ORDER or (k == 1 and c > CSP_MAX_CLASSES):
        raise GraphError(f"csp supports n <= {CSP_MAX_ORDER} and, for k = 1, at most {CSP_MAX_CLASSES} classes")
    if c == 1:
        for g in _catalog(n, f1, f2):
            if g.is_regular() and is_sr_graph(g, f1, f2, k):
                return Witness(g, 1)
        return NoneExists(len(_catalog(n, f1, f2)))
    use_table = k == 1
    if use_table:
        if hosts is None:
            hosts = _catalog(c, f1, f2)
        if not hosts:
            return NoneExists(0)
        table, toff = transversal_table(hosts, c)
    else:
        table, toff = np.zeros(1, np.bool_), np.zeros(c + 2, np.int64)
    deadline = time.monotonic() + cfg.time_budget
    nodes = 0
    for choice in _intra_choices(profile, f1, f2):
        parts = [_catalog(s, f1, f2)[x] for s, x in zip(profile.sizes, choice)]
        out = _run_csp(profile, parts, choice, f1, f2, k, use_table, table, toff, cfg, deadline, nodes)
        nodes = out.nodes
        if not isinstance(out, NoneExists):
            return out
    return NoneExists(nodes)


def _run_csp(prof, parts, choice, f1, f2, k, use_table, table, toff, cfg, deadline, nodes) -> CspOutcome:
    sizes = prof.sizes
    c = len(sizes)
    n = sum(sizes)
    offs = [sum(sizes[:i]) for i in range(c)]
    cls = np.array([i for i in range(c) for _ in range(sizes[i])], np.int64)
    placement = list(offs) + [offs[i] + x for i in range(c) for x in range(1, sizes[i])]
    pos = np.zeros(n, np.int64)
    for p, v in enumerate(placement):
        pos[v] = p
    members = np.full((c, max(sizes)), -1, np.int64)
    for i in range(c):
        members[i, : sizes[i]] = range(offs[i], offs[i] + sizes[i])
    msize = np.array(sizes, np.int64)
    rows = np.zeros(n, np.int64)
    twin_prev = np.full(n, -1, np.int64)
    for i, q in enumerate(parts):
        for a in range(q.n):
            rows[offs[i] + a] = q.adj[a] << offs[i]
            for b in range(a - 1, -1, -1):
                if _twins(q, a, b):
                    twin_prev[offs[i] + a] = offs[i] + b
                    break
    cur = np.array([q.degrees()[a] for q in parts for a in range(q.n)], np.int64)
    rem = np.array([n - sizes[cls[v]] for v in range(n)], np.int64)
    same_prev = np.full(c, -1, np.int64)
    for i in range(c):
        for j in range(i - 1, -1, -1):
            if sizes[j] == sizes[i] and choice[j] == choice[i]:
                same_prev[i] = j
                break
    vv, uu, first = [], [], []
    for p, v in enumerate(placement):
        start = True
        for u in placement[:p]:
            if cls[u] != cls[v]:
                vv.append(v)
                uu.append(u)
                first.append(start)
                start = False
    var_v = np.array(vv, np.int64)
    var_u = np.array(uu, np.int64)
    var_first = np.array(first, np.bool_)
    m = len(vv)
    val = np.full(m, -1, np.int64)
    eq = np.zeros(m, np.int64)
    state = np.zeros(1, np.int64)
    pidx = _pair_index(c)
    chunk = 2_000_000
    while True:
        budget = min(chunk, cfg.node_budget - nodes)
        if budget <= 0 or time.monotonic() > deadline:
            return BudgetExceeded(nodes)
        status, used = _cspkernel.search(
            n, c, cls, pos, members, msize, var_v, var_u, var_first, twin_prev,
            same_prev, use_table, table, toff, pidx,
            rows, cur, rem, val, eq, state, budget,
        )
        nodes += int(used)
        if status == _cspkernel.STATUS_DONE:
            return NoneExists(nodes)
        if status == _cspkernel.STATUS_LEAF:
            g = Graph(n, tuple(int(r) for r in rows))
            if _classes_match(g, offs, sizes) and is_sr_graph(g, f1, f2, k):
                return Witness(g, nodes)
            if use_table:
                raise AssertionError("csp leaf passed every transversal check but is not SR")
            state[0] = m - 1


def _classes_match(g: Graph, offs, sizes) -> bool:
    want = sorted(tuple(range(o, o + s)) for o, s in zip(offs, sizes))
    return sorted(dc.vertices for dc in g.degree_classes()) == want


# certification -------------------------------------------------------------------------


TOOL_VERSION = f"singram-{__version__}"


@dataclass
class SweepRecord:
    n: int
    method: str
    outcome: str  # "none", "witness", "budget"
    nodes: int = 0
    millis: int = 0
    detail: str = ""

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "n": self.n,
            "method": self.method,
            "outcome": self.outcome,
            "nodes": self.nodes,
            "millis": self.millis if timing else 0,
            "detail": self.detail,
        }


@dataclass
class Certificate:
    claim: str
    patterns: tuple[str, str]
    k: int
    value: int
    upper_bound: int
    witnesses: list[str]
    construction: str
    sweep: list[SweepRecord]
    complete: bool

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "claim": self.claim,
            "patterns": list(self.patterns),
            "k": self.k,
            "value": self.value,
            "upperBound": self.upper_bound,
            "witnesses": list(self.witnesses),
            "construction": self.construction,
            "sweep": [r.to_dict(timing) for r in self.sweep],
            "complete": self.complete,
            "toolVersion": TOOL_VERSION,
            "schemaVersion": SCHEMA_VERSION,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2) + "\n"

    def methods(self) -> dict[int, str]:
        return {r.n: r.method for r in self.sweep if r.outcome == "none"}


def _key(a: Graph, b: Graph) -> tuple[str, str]:
    return canonical_form(a), canonical_form(b)


def _registry() -> dict[tuple[str, str], tuple[str, dict]]:
    reg: dict[tuple[str, str], tuple[str, dict]] = {}

    def add(a: str, b: str, name: str, **params):
        reg[_key(parse_pattern(a), parse_pattern(b))] = (name, params)

    for a in ("2K2", "P4"):
        for b in ("2K2", "P4"):
            add(a, b, "sr2k2")
    for a in ("K3", "K13"):
        add(a, a, "k3-21")
    add("K3+K1", "K3+K1", "k3-21")
    add("K3", "K13", "k3claw28")
    add("PAW", "PAW", "paw30")
    add("C4", "C4", "c4-23")
    return reg


@lru_cache(maxsize=1)
def registry() -> dict[tuple[str, str], tuple[str, dict]]:
    return _registry()


def _star_leaves(g: Graph) -> int | None:
    s = g.n - 1
    if s < 2:
        return None
    from .patterns import Star, build

    return s if canonical_form(g) == canonical_form(build(Star(s))) else None


def lower_witness(f1: Graph, f2: Graph, k: int = 1) -> tuple[str, Graph]:
    """Best known SR-graph from the construction registry, verified.

    The complement of an SR-graph for (f1, f2) is one for (f2, f1), so both
    orientations are looked up.
    """
    candidates: list[tuple[str, Graph, bool]] = []
    p3 = parse_pattern("P3")
    key = _key(f1, f2)
    rev = _key(f2, f1)
    if k >= 1 and key == _key(p3, p3):
        candidates.append(("hk", run_builder("hk", k=k).graph, False))
    if k == 1:
        reg = registry()
        for kk, flip in ((key, False), (rev, True)):
            if kk in reg:
                name, params = reg[kk]
                candidates.append((name, run_builder(name, **params).graph, flip))
        s1, s2 = _star_leaves(f1), _star_leaves(f2)
        if s1 is not None and s1 == s2 and s1 > 2:
            name = "star-even" if s1 % 2 == 0 else "star-odd"
            candidates.append((name, run_builder(name, s=s1).graph, False))
        m = min(f1.n, f2.n)
        if m >= 3 and (m - 1) ** 2 <= MAX_ORDER:
            candidates.append(("theorem2", build_theorem2(m).graph, False))
    m = max(min(f1.n, f2.n) - 1, 0)
    candidates.append(("small-order", Graph.empty(m), False))
    best: tuple[str, Graph] | None = None
    for name, g, flip in candidates:
        if flip:
            g = g.complement()
        if is_sr_graph(g, f1, f2, k) and (best is None or g.n > best[1].n):
            best = (name, g)
    assert best is not None
    return best


def certify_rs(
    f1: Graph,
    f2: Graph,
    k: int = 1,
    cfg: SearchConfig | None = None,
    names: tuple[str, str] | None = None,
    log=None,
) -> Certificate:
    """Certify Rs(f1, f2, k): a verified witness of order value-1 and a
    nonexistence record for every n from value up to the quadratic bound."""
    cfg = cfg or SearchConfig()
    if k < 1:
        raise ValueError("k must be positive")
    q = quadratic_upper_bound(f1, f2, k)
    source, witness = lower_witness(f1, f2, k)
    value = witness.n + 1
    sweep: list[SweepRecord] = []
    n = value
    while n <= q:
        rec, found = _close_order(n, f1, f2, k, cfg)
        if log:
            log(rec)
        sweep.append(rec)
        if found is not None:
            # a larger SR-graph exists: raise the lower bound and drop older records
            witness, source, value = found, rec.method, n + 1
            sweep = [rec]
        n += 1
    closed = {r.n for r in sweep if r.outcome == "none"}
    complete = all(m in closed for m in range(value, q + 1))
    assert is_sr_graph(witness, f1, f2, k)
    pats = names or (f1.to_graph6(), f2.to_graph6())
    upper = q + 1
    for m in range(q, value - 1, -1):
        if m in closed:
            upper = m
        else:
            break
    return Certificate(
        claim="Rs exact" if complete else "Rs lower",
        patterns=pats,
        k=k,
        value=value,
        upper_bound=upper,
        witnesses=[witness.to_graph6()],
        construction=source,
        sweep=sweep,
        complete=complete,
    )


def _close_order(n: int, f1: Graph, f2: Graph, k: int, cfg: SearchConfig) -> tuple[SweepRecord, Graph | None]:
    t0 = time.monotonic()

    def ms() -> int:
        return int(round((time.monotonic() - t0) * 1000))

    if 2 <= n <= cfg.exhaustive_limit:
        res = sweep_sr(n, f1, f2, k)
        out = "witness" if res.witness is not None else "none"
        return SweepRecord(n, "exhaustive", out, res.graphs, ms()), res.witness
    profiles = class_profiles(n, f1, f2, k)
    if not profiles:
        method = "profile-infeasible" if k == 1 else "trivial-bound"
        return SweepRecord(n, method, "none", 0, ms()), None
    if k == 1:
        sub = substitution_search(n, f1, f2, profiles)
        if sub.witness is not None:
            return SweepRecord(n, "substitution", "witness", sub.assignments, ms()), sub.witness
        if sub.covered:
            return SweepRecord(n, "substitution", "none", sub.assignments, ms()), None
        groups: dict[ClassProfile, list[Graph]] = {}
        for prof, host in sub.uncovered:
            groups.setdefault(prof, []).append(host)
        todo = [(p, hs) for p, hs in groups.items()]
        detail = "substitution for stable hosts; csp for " + ", ".join(
            f"{p} over {len(hs)} unstable host(s)" for p, hs in todo
        )
        nodes = sub.assignments
    else:
        todo = [(p, None) for p in profiles]
        detail = "csp over all profiles"
        nodes = 0
    outcome = "none"
    for prof, hosts in todo:
        res = csp_search(prof, f1, f2, k, cfg, hosts)
        nodes += res.nodes
        if isinstance(res, Witness):
            return SweepRecord(n, "csp", "witness", nodes, ms(), detail), res.graph
        if isinstance(res, BudgetExceeded):
            outcome = "budget"
            detail += f"; budget exceeded on {prof}"
            break
    return SweepRecord(n, "csp", outcome, nodes, ms(), detail), None


def verify_certificate(cert: Certificate, f1: Graph, f2: Graph) -> bool:
    """Re-check the witness and, for complete certificates, the sweep coverage."""
    w = Graph.from_graph6(cert.witnesses[0])
    if w.n != cert.value - 1 or not is_sr_graph(w, f1, f2, cert.k):
        return False
    if not cert.complete:
        return True
    q = quadratic_upper_bound(f1, f2, cert.k)
    closed = {r.n for r in cert.sweep if r.outcome == "none"}
    return all(m in closed for m in range(cert.value, q + 1))


__all__ = [
    "BudgetExceeded",
    "Certificate",
    "ClassProfile",
    "NoneExists",
    "SearchConfig",
    "SubstitutionResult",
    "SweepRecord",
    "Witness",
    "certify_rs",
    "class_profiles",
    "csp_search",
    "exhaustive_no_sr",
    "lower_witness",
    "max_classes_bound",
    "quadratic_upper_bound",
    "substitution_search",
    "transversal_table",
    "verify_certificate",
]
