"""Command-line front end.

    milnor-mono gen braid:4 | milnor-mono analyze -
    milnor-mono gen ceva | milnor-mono graph -
    milnor-mono gen ex38 | milnor-mono check --theorem1 -

Every command reads one arrangement document (``-`` for stdin) and writes
JSON to stdout.  Precondition failures exit with status 2 and a JSON
diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .aomoto import WeightVector, aomoto_h1, aomoto_h1_projective, os_oracle_h1
from .analyzer import analyze, double_triple_check, graphic_check, theorem1_check
from .arrangement import (
    SimpleGraph,
    dumps,
    gen_braid,
    gen_graphic,
    gen_named,
    graph_of_graphic,
    parse_arrangement,
)
from .errors import PreconditionError
from .graph import build_graph, to_dot
from .lattice import euler_char_projective, rank2_flats

REPORT_DIR_ENV = "MILNOR_REPORT_DIR"


def _read(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise PreconditionError(f"cannot read {path}: {exc.strerror}") from None
    return parse_arrangement(text)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def parse_edge_list(text: str) -> SimpleGraph:
    """``1-2,1-3,2-3`` (1-based vertices); ``12,13`` is accepted for single digits."""
    edges = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        if "-" in item:
            a, b = item.split("-", 1)
        elif len(item) == 2 and item.isdigit():
            a, b = item
        else:
            raise PreconditionError(f"cannot read edge {item!r}")
        try:
            edges.append((int(a) - 1, int(b) - 1))
        except ValueError:
            raise PreconditionError(f"cannot read edge {item!r}") from None
    if any(v < 0 for e in edges for v in e):
        raise PreconditionError("vertices are numbered from 1")
    return SimpleGraph.from_edges(edges)


def generate(name: str):
    if name.startswith("braid:"):
        try:
            n = int(name.split(":", 1)[1])
        except ValueError:
            raise PreconditionError(f"bad braid size in {name!r}") from None
        return gen_braid(n)
    if name.startswith("graphic:"):
        return gen_graphic(parse_edge_list(name.split(":", 1)[1]))
    return gen_named(name)


def cmd_gen(args) -> int:
    text = dumps(generate(args.name)) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_lattice(args) -> int:
    arr = _read(args.input)
    flats = rank2_flats(arr)
    if args.text:
        for f in flats:
            names = " ".join(arr.label(i) for i in f.members)
            sys.stdout.write(f"{f.multiplicity}\t{names}\n")
        return 0
    out = {
        "d": arr.d,
        "flats": [
            {"members": list(f.members), "labels": [arr.label(i) for i in f.members],
             "multiplicity": f.multiplicity}
            for f in flats
        ],
    }
    if arr.rank == 3:
        out["euler_characteristic"] = euler_char_projective(arr, flats)
    _emit(out)
    return 0


def cmd_graph(args) -> int:
    arr = _read(args.input)
    g = build_graph(arr)
    if args.dot:
        sys.stdout.write(to_dot(g, arr.labels))
        return 0
    _emit({
        "d": arr.d,
        "edges": [list(e) for e in sorted(g.edges)],
        "components": [list(c) for c in g.components],
        "connected": g.is_connected,
    })
    return 0


def cmd_aomoto(args) -> int:
    arr = _read(args.input)
    p = None if args.rational else args.char
    if args.weights:
        try:
            ks = json.loads(Path(args.weights).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise PreconditionError(f"cannot read weights: {exc}") from None
        if not isinstance(ks, list) or not all(isinstance(x, int) for x in ks):
            raise PreconditionError("weights file must hold a JSON list of integers")
        weights = WeightVector(tuple(ks), p)
    else:
        weights = WeightVector.all_ones(arr.d, p)
    if args.projective:
        report = aomoto_h1_projective(arr, weights)
    elif args.oracle:
        report = os_oracle_h1(arr, weights)
    else:
        report = aomoto_h1(arr, weights)
    _emit(report.to_dict())
    return 0


def cmd_analyze(args) -> int:
    arr = _read(args.input)
    text = analyze(arr, seed=args.seed).to_json()
    target = args.output
    if target is None and os.environ.get(REPORT_DIR_ENV) and args.input != "-":
        target = Path(os.environ[REPORT_DIR_ENV]) / (Path(args.input).stem + ".report.json")
    if target is not None:
        Path(target).write_text(text, encoding="utf-8")
    sys.stdout.write(text)
    return 0


def cmd_check(args) -> int:
    arr = _read(args.input)
    if args.theorem1:
        _emit(theorem1_check(arr).to_dict())
    elif args.double_triple:
        _emit(double_triple_check(arr).to_dict())
    else:
        _emit(graphic_check(graph_of_graphic(arr)).to_dict())
    return 0


def cmd_corpus(args) -> int:
    from .corpus import entries, verify

    if args.verify:
        failures = verify()
        _emit({"checked": len(entries()), "failures": failures})
        return 1 if failures else 0
    _emit([e["name"] for e in entries()])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="milnor-mono", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write an arrangement document")
    p.add_argument("name", help="ceva, ex36..ex39, remark311, braid:N or graphic:1-2,2-3,...")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("lattice", help="rank-2 flats")
    p.add_argument("input")
    p.add_argument("--text", action="store_true", help="tab-separated listing")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("graph", help="arrangement graph and its components")
    p.add_argument("input")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("aomoto", help="H^1 of the Aomoto complex")
    p.add_argument("input")
    ring = p.add_mutually_exclusive_group(required=True)
    ring.add_argument("--char", type=int, metavar="P")
    ring.add_argument("--rational", action="store_true")
    w = p.add_mutually_exclusive_group()
    w.add_argument("--weights", metavar="FILE", help="JSON list of integers")
    w.add_argument("--all-ones", action="store_true", help="default")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--projective", action="store_true")
    mode.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_aomoto)

    p = sub.add_parser("analyze", help="per-eigenvalue monodromy report")
    p.add_argument("input")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="combinatorial criteria")
    p.add_argument("input")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--theorem1", action="store_true")
    which.add_argument("--double-triple", action="store_true")
    which.add_argument("--graphic", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("corpus", help="list or verify the bundled corpus")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
