"""Command-line interface: ``singram {build,check,certify,turan,enum}``.

Every run writes its results as files in the output directory (``--out``,
else ``$SINGRAM_OUT``, else ``./singram-out``) together with a
``manifest.json`` holding the command line and SHA-256 digests.

Exit codes: 0 success, 1 property violated or unstable, 2 input error,
3 certificate incomplete.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from ._version import __version__
from .constructions import BUILDERS, run_builder
from .enumeration import GenerationLimitError, enumerate_r_graphs, stability_report
from .graph import Graph, GraphError
from .graph6 import Graph6Error, read_graph6_lines
from .patterns import PatternError, parse_pattern, pattern_name
from .search import SearchConfig, certify_rs, verify_certificate
from .singular import sr_violation
from .turan import ts_exact, ts_gap_report, ts_lower, write_gap_csv, write_ts_csv

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INPUT = 2
EXIT_INCOMPLETE = 3

OUT_ENV = "SINGRAM_OUT"


class InputError(Exception):
    pass


@dataclass
class RunManifest:
    argv: list[str]
    seed: int
    wall_time: float = 0.0
    outputs: dict[str, str] = field(default_factory=dict)
    exit_code: int = 0

    def to_dict(self) -> dict:
        return {
            "command": self.argv,
            "toolVersion": __version__,
            "seed": self.seed,
            "wallTime": round(self.wall_time, 3),
            "exitCode": self.exit_code,
            "outputs": dict(sorted(self.outputs.items())),
        }


def sha256_file(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


class Outputs:
    def __init__(self, root: Path):
        self.root = root
        self.files: list[Path] = []

    def write(self, name: str, text: str) -> Path:
        self.root.mkdir(parents=True, exist_ok=True)
        path = self.root / name
        path.write_text(text)
        self.files.append(path)
        return path

    def json(self, name: str, obj) -> Path:
        return self.write(name, json.dumps(obj, indent=2) + "\n")

    def register(self, path: Path) -> Path:
        self.files.append(Path(path))
        return Path(path)


def _pattern(text: str | None, fallback: str | None = None) -> tuple[Graph, str]:
    text = text if text is not None else fallback
    if text is None:
        raise InputError("a pattern is required")
    try:
        return parse_pattern(text), pattern_name(text)
    except (PatternError, GraphError) as exc:
        raise InputError(str(exc)) from exc


def _slug(*parts: object) -> str:
    return "_".join(str(p).replace(",", "-").replace("+", "u").replace("(", "").replace(")", "") for p in parts)


# commands -----------------------------------------------------------------------------


def cmd_build(args, out: Outputs) -> int:
    if args.name not in BUILDERS:
        raise InputError(f"unknown builder {args.name!r}; choose from {', '.join(sorted(BUILDERS))}")
    params = {p: getattr(args, p, None) for p in BUILDERS[args.name].params}
    try:
        rep = run_builder(args.name, **params)
    except (GraphError, ValueError, RuntimeError) as exc:
        raise InputError(str(exc)) from exc
    stem = _slug(args.name, *(f"{k}{v}" for k, v in params.items()))
    out.write(f"{stem}.g6", rep.graph.to_graph6() + "\n")
    out.json(f"{stem}.report.json", rep.to_dict())
    status = "verified" if rep.ok else "FAILED"
    print(f"{args.name}: {rep.graph.n} vertices, {rep.graph.num_edges} edges, {status}")
    return EXIT_OK if rep.ok else EXIT_VIOLATED


def _read_graphs(path: str) -> list[Graph]:
    try:
        with open(path) as fh:
            graphs = list(read_graph6_lines(fh))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except (Graph6Error, GraphError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    if not graphs:
        raise InputError(f"{path}: no graphs found")
    return graphs


def cmd_check(args, out: Outputs) -> int:
    f1, n1 = _pattern(args.f1)
    f2, n2 = _pattern(args.f2, args.f1)
    graphs = _read_graphs(args.file)
    results = []
    bad = 0
    for i, g in enumerate(graphs):
        v = sr_violation(g, f1, f2, args.k)
        entry = {"index": i, "order": g.n, "graph6": g.to_graph6(), "sr": v is None}
        if v is None:
            print(f"graph {i}: SR-graph for ({n1}, {n2}, k={args.k})")
        else:
            bad += 1
            side, w = v
            entry["violation"] = {"side": side, **w.to_dict()}
            print(f"graph {i}: violated on the {side} side: vertices {list(w.vertices)} degrees {list(w.host_degrees)}")
        results.append(entry)
    out.json("check.json", {"patterns": [n1, n2], "k": args.k, "results": results})
    return EXIT_VIOLATED if bad else EXIT_OK


def cmd_certify(args, out: Outputs) -> int:
    f1, n1 = _pattern(args.f1)
    f2, n2 = _pattern(args.f2, args.f1)
    try:
        cfg = SearchConfig(
            node_budget=args.node_budget,
            time_budget=args.time_budget,
            jobs=args.jobs,
            seed=args.seed,
            exhaustive_limit=args.exhaustive_limit,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from exc

    def log(rec):
        if args.verbose:
            print(f"  n={rec.n}: {rec.method} -> {rec.outcome}", file=sys.stderr)

    try:
        cert = certify_rs(f1, f2, args.k, cfg, names=(n1, n2), log=log)
    except GenerationLimitError as exc:
        raise InputError(str(exc)) from exc
    assert verify_certificate(cert, f1, f2)
    stem = _slug("certificate", n1, n2, f"k{args.k}")
    out.write(f"{stem}.json", cert.to_json(timing=args.timing))
    out.write(f"{stem}.g6", "".join(w + "\n" for w in cert.witnesses))
    state = "complete" if cert.complete else "incomplete"
    print(f"Rs({n1}, {n2}; k={args.k}) {'=' if cert.complete else '>='} {cert.value} ({state}); "
          f"witness of order {cert.value - 1} from {cert.construction}")
    if not cert.complete:
        open_ns = [r.n for r in cert.sweep if r.outcome != "none"]
        print(f"frontier: value in [{cert.value}, {cert.upper_bound}], open orders {open_ns}")
    return EXIT_OK if cert.complete else EXIT_INCOMPLETE


def _ns(args) -> list[int]:
    if args.n is not None:
        return [args.n]
    if args.n_range:
        try:
            a, b = (int(x) for x in args.n_range.split(":"))
        except ValueError as exc:
            raise InputError("--n-range expects A:B") from exc
        return list(range(a, b + 1))
    raise InputError("give --n or --n-range")


def cmd_turan(args, out: Outputs) -> int:
    g, name = _pattern(args.pattern)
    ns = _ns(args)
    stem = _slug("turan", name, args.mode, f"k{args.k}", f"n{ns[0]}-{ns[-1]}")
    if args.mode == "gap":
        try:
            rows = ts_gap_report(g, ns, c=args.c, k=args.k)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        out.register(write_gap_csv(rows, _ensure(out.root) / f"{stem}.csv"))
        out.json(f"{stem}.json", [r.to_dict() for r in rows])
        for r in rows:
            gap = "degenerate" if r.gap is None else r.gap
            print(f"n={r.n}: ex={r.turan} lower={r.lower} gap={gap} ({r.status})")
        return EXIT_OK
    results = []
    for n in ns:
        if args.mode == "exact":
            try:
                res = ts_exact(n, g, args.k)
            except GenerationLimitError as exc:
                raise InputError(f"{exc}; use --mode lower for larger n") from exc
        else:
            res = ts_lower(n, g, args.k)
        res.pattern = name
        results.append(res)
        print(f"Ts({n}, {name}; k={args.k}) {'=' if args.mode == 'exact' else '>='} {res.value} [{res.method}]")
    out.register(write_ts_csv(results, _ensure(out.root) / f"{stem}.csv"))
    out.json(f"{stem}.json", [r.to_dict() for r in results])
    out.write(f"{stem}.g6", "".join(w + "\n" for r in results for w in r.witnesses))
    return EXIT_OK


def _ensure(path: Path) -> Path:
    path.mkdir(parents=True, exist_ok=True)
    return path


def cmd_enum(args, out: Outputs) -> int:
    f1, n1 = _pattern(args.f1)
    f2, n2 = _pattern(args.f2, args.f1)
    if args.stability:
        h, hn = _pattern(args.stability)
        try:
            rep = stability_report(h, f1, f2)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        out.json(_slug("stability", hn, n1, n2) + ".json", {"host": hn, "patterns": [n1, n2], **rep.to_dict()})
        if rep.stable:
            print(f"{hn} is Ramsey-stable for ({n1}, {n2})")
            return EXIT_OK
        print(f"{hn} is not Ramsey-stable for ({n1}, {n2}); offending vertices {rep.offending()}")
        return EXIT_VIOLATED
    if args.n is None:
        raise InputError("enum needs --n or --stability")
    try:
        cat = enumerate_r_graphs(args.n, f1, f2)
    except GenerationLimitError as exc:
        raise InputError(str(exc)) from exc
    stem = _ensure(out.root) / _slug("rgraphs", args.n, n1, n2)
    for p in cat.write(stem, (n1, n2)):
        out.register(p)
    print(f"{len(cat)} R-graph(s) of order {args.n} for ({n1}, {n2})")
    for g in cat:
        print(f"  {g.to_graph6()}  degrees {sorted(g.degrees())}")
    return EXIT_OK


# parser --------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help=f"output directory (default ${OUT_ENV} or ./singram-out)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1, help="parallel width (runs are deterministic)")

    p = argparse.ArgumentParser(prog="singram", description="Singular Ramsey and Turán numbers of small graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="build and verify a named construction")
    b.add_argument("name", help=", ".join(sorted(BUILDERS)))
    for opt in ("k", "n", "s", "q", "p"):
        b.add_argument(f"--{opt}", type=int)
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("check", parents=[common], help="test graphs from a graph6 file for the SR property")
    c.add_argument("file")
    c.add_argument("--f1", required=True)
    c.add_argument("--f2")
    c.add_argument("--k", type=int, default=1)
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("certify", parents=[common], help="certify Rs(f1, f2, k)")
    r.add_argument("--f1", required=True)
    r.add_argument("--f2")
    r.add_argument("--k", type=int, default=1)
    r.add_argument("--node-budget", type=int, default=SearchConfig.node_budget)
    r.add_argument("--time-budget", type=float, default=SearchConfig.time_budget, help="seconds per csp call")
    r.add_argument("--exhaustive-limit", type=int, default=SearchConfig.exhaustive_limit)
    r.add_argument("--timing", action="store_true", help="record per-order timings in the certificate")
    r.add_argument("-v", "--verbose", action="store_true")
    r.set_defaults(func=cmd_certify)

    t = sub.add_parser("turan", parents=[common], help="singular Turán numbers")
    t.add_argument("--n", type=int)
    t.add_argument("--n-range")
    t.add_argument("--pattern", required=True)
    t.add_argument("--k", type=int, default=1)
    t.add_argument("--mode", choices=("exact", "lower", "gap"), default="exact")
    t.add_argument("--c", type=float, default=1.0, help="constant in the gap allowance c*q*p^3")
    t.set_defaults(func=cmd_turan)

    e = sub.add_parser("enum", parents=[common], help="R-graph catalogues and stability")
    e.add_argument("--n", type=int)
    e.add_argument("--f1", required=True)
    e.add_argument("--f2")
    e.add_argument("--stability", metavar="H")
    e.set_defaults(func=cmd_enum)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "k", None) is not None and args.k < 1:
        print("error: k must be positive", file=sys.stderr)
        return EXIT_INPUT
    root = Path(args.out or os.environ.get(OUT_ENV) or "singram-out")
    out = Outputs(root)
    manifest = RunManifest(argv, args.seed)
    t0 = time.monotonic()
    try:
        code = args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_INPUT
    manifest.wall_time = time.monotonic() - t0
    manifest.exit_code = code
    manifest.outputs = {p.name: sha256_file(p) for p in out.files if p.exists()}
    _ensure(root)
    (root / "manifest.json").write_text(json.dumps(manifest.to_dict(), indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
