"""Command-line interface: ``zagreb {index,bounds,threshold,subdivide,scan}``.

Every command writes one JSON object per line on stdout (or readable text
with ``--output text``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import enum
import json
import sys
from fractions import Fraction
from typing import Iterable, Optional

from . import bounds as bnd
from .enumeration import CHECKS, ScanConfig, scan
from .errors import ZagrebError
from .families import parse_family, subdivide, threshold_a, threshold_root
from .graph import Graph, is_bipartite
from .graph_io import read_graphs, write_edge_list, write_graph6
from .indices import (
    compare_indices,
    first_zagreb,
    second_zagreb,
    variable_first_zagreb,
    variable_second_zagreb,
)


def _real(x: float) -> float:
    return float(f"{x:.12g}")


def jsonable(obj):
    """Exact integers stay ints, fractions become ``"p/q"`` strings, and
    floats are rounded to 12 significant digits."""
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, float):
        return _real(obj)
    if isinstance(obj, Graph):
        return {"n": obj.n, "m": obj.m, "edges": [list(e) for e in obj.edges],
                "graph6": write_graph6(obj).decode()}
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalar
        return jsonable(obj.item())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


class _Emitter:
    def __init__(self, fmt: str, out):
        self.fmt = fmt
        self.out = out
        self.errors = 0

    def error(self, command: str, source: str, exc: ZagrebError) -> None:
        """Report a graph the command is undefined on, and keep going."""
        self.errors += 1
        message = f"{type(exc).__name__}: {exc}"
        print(f"zagreb {command}: {source}: {message}", file=sys.stderr)
        if self.fmt == "json":
            record = {"command": command, "input": source, "error": message}
            self.out.write(json.dumps(record, separators=(",", ":")) + "\n")
        else:
            self.out.write(f"== {command} {source}\nerror: {message}\n")

    def emit(self, command: str, source: str, payload, **extra) -> None:
        record = {"command": command, "input": source, **extra, "payload": jsonable(payload)}
        if self.fmt == "json":
            self.out.write(json.dumps(record, separators=(",", ":")) + "\n")
        else:
            self.out.write(f"== {command} {source}\n")
            for key, value in extra.items():
                self.out.write(f"{key}: {value}\n")
            _write_text(self.out, record["payload"], indent="")


def _write_text(out, value, indent: str) -> None:
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item and not _flat_list(item):
                out.write(f"{indent}{key}:\n")
                _write_text(out, item, indent + "  ")
            else:
                out.write(f"{indent}{key}: {_inline(item)}\n")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict):
                out.write(f"{indent}-\n")
                _write_text(out, item, indent + "  ")
            else:
                out.write(f"{indent}- {_inline(item)}\n")
    else:
        out.write(f"{indent}{_inline(value)}\n")


def _flat_list(item) -> bool:
    return isinstance(item, list) and all(not isinstance(v, dict) for v in item)


def _inline(item) -> str:
    if isinstance(item, list):
        return json.dumps(item, separators=(",", ":"))
    return str(item)


def _graphs(args, stdin) -> Iterable[tuple[str, Graph]]:
    if args.family:
        if args.input:
            raise ZagrebError("give either an input path or --family, not both")
        return [(args.family, parse_family(args.family))]
    if not args.input:
        raise ZagrebError("no input: give a path, '-' for stdin, or --family")
    return read_graphs(args.input, args.input_format, stdin=stdin)


def cmd_index(args, emit: _Emitter, stdin) -> None:
    for source, g in _graphs(args, stdin):
        try:
            report = compare_indices(g)
            payload = dataclasses.asdict(report)
            payload["verdict"] = report.verdict
            if args.lam:
                payload["variable"] = [
                    {"lambda": lam,
                     "m1": variable_first_zagreb(g, lam).value,
                     "m2": variable_second_zagreb(g, lam).value}
                    for lam in args.lam
                ]
        except ZagrebError as exc:
            emit.error("index", source, exc)
            continue
        emit.emit("index", source, payload)


def _guarded(fn, *a):
    try:
        result = fn(*a)
    except ZagrebError as exc:
        return [{"name": fn.__name__.removeprefix("check_"), "skipped": str(exc)}]
    return list(result) if isinstance(result, tuple) else [result]


def cmd_bounds(args, emit: _Emitter, stdin) -> None:
    for source, g in _graphs(args, stdin):
        checks = [bnd.check_m1_lower(g), bnd.check_m2_lower(g)]
        checks += _guarded(bnd.check_common_upper, g)
        if args.das:
            checks += _guarded(bnd.check_das_upper, g)
        for lam in args.variable or ():
            checks += _guarded(bnd.check_variable_m1_lower, g, lam)
            checks += _guarded(bnd.check_variable_m2_lower, g, lam)
            checks += _guarded(bnd.check_variable_upper, g, lam)
        ran = [c for c in checks if isinstance(c, bnd.BoundCheck)]
        payload = {
            "checks": checks,
            "all_satisfied": all(c.satisfied for c in ran),
            "tight": [c.name for c in ran if c.tight],
        }
        emit.emit("bounds", source, payload)


def _b_values(text: str) -> list[int]:
    for sep in ("..", ":", "-"):
        if sep in text.lstrip("-"):
            lo, hi = text.split(sep, 1)
            return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def cmd_threshold(args, emit: _Emitter, stdin) -> None:
    for b in _b_values(args.b):
        result = threshold_a(b)
        payload = dataclasses.asdict(result)
        payload["root"] = float(threshold_root(b))
        emit.emit("threshold", f"b={b}", payload)


def cmd_subdivide(args, emit: _Emitter, stdin) -> None:
    for source, g in _graphs(args, stdin):
        s = subdivide(g)
        m1_g, m1_s, m2_s = first_zagreb(g), first_zagreb(s), second_zagreb(s)
        try:
            theorem = bnd.check_subdivision_theorem(g)
        except ZagrebError as exc:
            emit.error("subdivide", source, exc)
            continue
        payload = {
            "subdivision": s,
            "degree_multiset": sorted(s.degrees),
            "bipartite": is_bipartite(s),
            "m1_identity": {"m1_s": m1_s, "m1_g_plus_4m": m1_g + 4 * g.m, "holds": m1_s == m1_g + 4 * g.m},
            "m2_identity": {"m2_s": m2_s, "two_m1_g": 2 * m1_g, "holds": m2_s == 2 * m1_g},
            "theorem": theorem,
            "verdict": "equality" if theorem.tight else ("strict" if theorem.satisfied else "fails"),
        }
        emit.emit("subdivide", source, payload)


def cmd_scan(args, emit: _Emitter, stdin) -> None:
    checks = tuple(c for c in args.checks.split(",") if c) if args.checks is not None else CHECKS
    config = ScanConfig(
        n_max=args.n_max,
        corpus=args.corpus,
        n_min=args.n_min,
        connected_only=not args.include_disconnected,
        class_filter=args.cls,
        checks=checks,
        jobs=args.jobs,
        cap=args.cap,
    )
    report = scan(config)
    source = f"corpus:{args.corpus}" if args.corpus else f"exhaustive:{args.n_min}..{args.n_max}"
    emit.emit("scan", source, report.to_dict(), failures=report.failure_count)


def cmd_convert(args, emit: _Emitter, stdin) -> None:
    for _, g in _graphs(args, stdin):
        emit.out.write(write_edge_list(g) if args.to == "edges" else write_graph6(g).decode() + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zagreb", description=__doc__.splitlines()[0])
    parser.add_argument("--output", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("input", nargs="?", help="edge-list or graph6 file, '-' for stdin")
        p.add_argument("--family", help="star:N, cycle:N, path:N, complete:N, cab:A,B or s6k3")
        p.add_argument("--input-format", choices=("auto", "edges", "graph6"), default="auto")

    p = sub.add_parser("index", help="M1, M2 and the exact comparison")
    graph_input(p)
    p.add_argument("--lambda", dest="lam", type=float, action="append",
                   help="also report variable indices (repeatable)")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("bounds", help="lower/upper bounds with equality cases")
    graph_input(p)
    p.add_argument("--das", action="store_true", help="include the Das upper bound")
    p.add_argument("--variable", type=float, action="append", metavar="LAMBDA",
                   help="include the variable-index bounds at LAMBDA (repeatable)")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("threshold", help="smallest a making C(a, b) a counterexample")
    p.add_argument("b", help="b, or a range like 2..20")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("subdivide", help="subdivision graph with its index identities")
    graph_input(p)
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("scan", help="exhaustive or corpus scan")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--n-max", type=int)
    source.add_argument("--corpus", help="graph6 file")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--class", dest="cls", help="tree, unicyclic, chemical or k_cyclic:K")
    p.add_argument("--include-disconnected", action="store_true")
    p.add_argument("--checks", help=f"comma list from {','.join(CHECKS)}; empty string for none")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=1000, help="max graphs listed per category")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("convert", help="re-emit a graph as an edge list or graph6")
    graph_input(p)
    p.add_argument("--to", choices=("edges", "graph6"), default="graph6")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: Optional[list[str]] = None, stdout=None, stdin=None) -> int:
    args = build_parser().parse_args(argv)
    emit = _Emitter(args.output, stdout if stdout is not None else sys.stdout)
    try:
        args.func(args, emit, stdin)
    except (ZagrebError, OSError) as exc:
        print(f"zagreb {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 1 if emit.errors else 0


if __name__ == "__main__":
    sys.exit(main())
