"""Command-line front end.

Exit codes: 0 pass, 1 a verified failure (invariant breach or failing
verdict), 2 usage, parse, precondition or oracle-limit errors. Every path
argument accepts ``-`` for standard input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import GraphError, InvariantBreach, NotConnectedError, OracleLimitError
from .generate import GenSpec, parse_fixture, random_planar
from .graph import EmbeddedGraph, Graph
from .io import graph_from_dict, serialize_graph, to_dot
from .represent import RepresentationPair, planar_representation
from .verify import brute_bandwidth, brute_ccw, certify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Raised for bad input; reported on stderr with exit code 2."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load_json(path: str):
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from exc


def _load_graph(path: str):
    try:
        return graph_from_dict(_load_json(path))
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_gen(args) -> int:
    random_flags = [f for f in ("n", "seed", "keep") if getattr(args, f) is not None]
    if args.fixture and random_flags:
        raise UsageError(f"--fixture excludes --{random_flags[0]}")
    if args.keep is not None and not 0.0 < args.keep <= 1.0:
        raise UsageError(f"--keep must lie in (0, 1], got {args.keep}")
    try:
        if args.fixture:
            eg = parse_fixture(args.fixture)
        else:
            if args.n is None:
                raise UsageError("either --fixture or --n is required")
            spec = GenSpec(args.n, seed=args.seed or 0,
                           edge_keep_ratio=1.0 if args.keep is None else args.keep)
            eg = random_planar(spec)
    except (ValueError, KeyError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(str(exc)) from exc
    _write(serialize_graph(eg) + "\n", args.output)
    return EXIT_OK


def cmd_represent(args) -> int:
    eg = _load_graph(args.input)
    if not isinstance(eg, EmbeddedGraph):
        raise UsageError(f"{args.input}: a rotation system is required")
    try:
        pair = planar_representation(eg)
    except NotConnectedError as exc:
        raise UsageError(f"input graph must be connected: {exc}") from exc
    except InvariantBreach as exc:
        print(f"invariant breach [{exc.stage}]: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except GraphError as exc:
        raise UsageError(str(exc)) from exc
    _write(json.dumps(pair.to_dict()) + "\n", args.output)
    if args.emit_dot:
        out = Path(args.emit_dot)
        out.mkdir(parents=True, exist_ok=True)
        (out / "G.dot").write_text(to_dot(pair.graph, "G"))
        (out / "G1.dot").write_text(to_dot(pair.g1, "G1", cover=pair.cover.cliques))
        (out / "G2.dot").write_text(to_dot(pair.g2, "G2"))
    return EXIT_OK if pair.report.get("ok") else EXIT_FAIL


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    graph = g.graph if isinstance(g, EmbeddedGraph) else g
    doc = _load_json(args.pair)
    try:
        pair = RepresentationPair.from_dict(doc, graph)
    except (GraphError, KeyError, TypeError) as exc:
        raise UsageError(f"{args.pair}: malformed representation pair: {exc}") from exc
    report = certify(pair, graph, pair.layers)
    print(json.dumps(report))
    for line in report["violations"]:
        print(f"FAIL {line}", file=sys.stderr)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    graph: Graph = g.graph if isinstance(g, EmbeddedGraph) else g
    fn = brute_ccw if args.ccw else brute_bandwidth
    try:
        print(fn(graph, limit=args.limit))
    except OracleLimitError as exc:
        raise UsageError(str(exc)) from exc
    return EXIT_OK


def cmd_pipeline(args) -> int:
    if not args.selftest:
        raise UsageError("pipeline needs --selftest")
    from .acceptance import run_all

    results = run_all()
    print(f"{'#':>2}  {'result':6}  {'secs':>6}  criterion")
    for r in results:
        print(f"{r.number:>2}  {'PASS' if r.passed else 'FAIL':6}  {r.seconds:6.2f}  {r.title}")
        print(f"    {r.detail}")
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if passed == len(results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planar-ccw", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a random or fixture planar graph as JSON")
    p.add_argument("--fixture", help="fixture such as cycle:5, grid:3,4 or nested_cycles:3,4")
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--keep", type=float, help="fraction of triangulation edges to keep, in (0, 1]")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("represent", help="run the planar pipeline on an embedded graph")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--emit-dot", metavar="DIR", help="write G.dot, G1.dot and G2.dot into DIR")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("verify", help="re-certify a representation pair against its graph")
    p.add_argument("graph")
    p.add_argument("pair")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact brute-force CCW or bandwidth")
    p.add_argument("graph")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--ccw", action="store_true")
    which.add_argument("--bw", action="store_true")
    p.add_argument("--limit", type=int, default=None,
                   help="largest n accepted (default from PLANAR_CCW_ORACLE_LIMIT, else 8)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("pipeline", help="desk-scale acceptance run")
    p.add_argument("--selftest", action="store_true")
    p.set_defaults(func=cmd_pipeline)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
