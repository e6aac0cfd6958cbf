"""Command-line front end.

Exit status: 0 when the property holds (or the command simply succeeded), 1 when
it fails, 2 on usage or input errors.  JSON goes to stdout (or ``--output``),
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from .core import core
from .errors import GraphFormatError, NotStarConvexError, StarConvexError
from .fuzz import PROPERTIES, dump_findings, run_campaign
from .graph import WeightedGraph, dumps_canonical, export_dot, graph_to_dict, parse_graph
from .oracle import brute_core, size_bound
from .ops import graph_intersection, graph_union, overlap_analysis
from .sequences import ConvexSequenceClass, embed, validate_class
from .witness import WitnessTree, extract_witness_tree, verify_witness

PROG = "starconvex"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _graph(path: str) -> WeightedGraph:
    return parse_graph(_read(path))


def _json(path: str) -> Any:
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed JSON in {path} ({exc.msg} at line {exc.lineno})") from None


def _parse_seeds(text: str) -> range | list[int]:
    """``N``, ``A:B`` (half-open) or a comma-separated list."""
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return range(int(lo), int(hi))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad seed range {text!r}") from None


def _check(args: argparse.Namespace) -> tuple[int, str]:
    report = core(_graph(args.graph))
    return (0 if report.star_convex else 1), dumps_canonical(report.to_dict())


def _core(args: argparse.Namespace) -> tuple[int, str]:
    return 0, dumps_canonical({"core": sorted(core(_graph(args.graph)).core)})


def _extract(args: argparse.Namespace) -> tuple[int, str]:
    g = _graph(args.graph)
    try:
        wt = extract_witness_tree(g, args.root)
    except NotStarConvexError as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 1, ""
    return 0, dumps_canonical(wt.to_dict())


def _verify(args: argparse.Namespace) -> tuple[int, str]:
    g = _graph(args.graph)
    wt = WitnessTree.from_dict(_json(args.tree))
    verdict = verify_witness(g, wt)
    return (0 if verdict else 1), dumps_canonical({"valid": verdict.ok, "reason": verdict.reason})


def _combine(op: Callable[[WeightedGraph, WeightedGraph], WeightedGraph], flag: str):
    def handler(args: argparse.Namespace) -> tuple[int, str]:
        g1, g2 = _graph(args.g1), _graph(args.g2)
        combined = op(g1, g2)
        if not args.analyze:
            return 0, dumps_canonical(graph_to_dict(combined))
        report = overlap_analysis(g1, g2)
        doc = {"graph": graph_to_dict(combined), "report": report.to_dict()}
        return (0 if getattr(report, flag) else 1), dumps_canonical(doc)

    return handler


def _embed(args: argparse.Namespace) -> tuple[int, str]:
    c = ConvexSequenceClass.from_dict(_json(args.cls))
    report = validate_class(c)
    if not report.valid:
        print(f"{PROG}: sequence class is invalid", file=sys.stderr)
        return 1, dumps_canonical(report.to_dict())
    return 0, dumps_canonical(embed(c).to_dict())


def _validate_class(args: argparse.Namespace) -> tuple[int, str]:
    report = validate_class(ConvexSequenceClass.from_dict(_json(args.cls)))
    return (0 if report.valid else 1), dumps_canonical(report.to_dict())


def _oracle(args: argparse.Namespace) -> tuple[int, str]:
    g = _graph(args.graph)
    fast = core(g).core
    brute = brute_core(g, bound=args.bound)
    doc = {"agree": fast == brute, "brute": sorted(brute), "fast": sorted(fast)}
    return (0 if fast == brute else 1), dumps_canonical(doc)


def _fuzz(args: argparse.Namespace) -> tuple[int, str]:
    props = [p for p in args.props.split(",") if p]
    unknown = [p for p in props if p not in PROPERTIES]
    if unknown:
        raise UsageError(f"unknown properties: {', '.join(unknown)}")
    findings = run_campaign(props, args.seeds)
    flagged = [f for f in findings if f.verdict != "pass"]
    for name in props:
        mine = [f for f in findings if f.property == name]
        bad = sum(f.verdict != "pass" for f in mine)
        print(f"{PROG}: {name}: {len(mine) - bad}/{len(mine)} pass", file=sys.stderr)
    return (1 if flagged else 0), dump_findings(findings if args.all else flagged)


def _dot(args: argparse.Namespace) -> tuple[int, str]:
    g = _graph(args.graph)
    return 0, export_dot(g, core(g) if args.annotate else None)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", "-o", metavar="PATH", help="write the result here instead of stdout")

    parser = _Parser(prog=PROG, description="Weighted star-convexity of graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, handler, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(handler=handler)
        return p

    p = add("check", _check, "decide star-convexity and print the core report")
    p.add_argument("graph")
    p = add("core", _core, "print the core")
    p.add_argument("graph")
    p = add("extract-tree", _extract, "extract a star-convex witness tree")
    p.add_argument("graph")
    p.add_argument("--root", help="core vertex to grow the tree from")
    p = add("verify-tree", _verify, "check a witness tree against its graph")
    p.add_argument("graph")
    p.add_argument("tree")
    for name, op, flag in (
        ("union", graph_union, "union_star_convex"),
        ("intersect", graph_intersection, "intersection_star_convex"),
    ):
        p = add(name, _combine(op, flag), f"{name} of two graphs")
        p.add_argument("g1")
        p.add_argument("g2")
        p.add_argument("--analyze", action="store_true", help="also report cores and star-convexity")
    p = add("embed", _embed, "embed a convex sequence class onto a spider")
    p.add_argument("cls", metavar="class")
    p = add("validate-class", _validate_class, "validate a convex sequence class")
    p.add_argument("cls", metavar="class")
    p = add("oracle", _oracle, "compare the fast core against brute force")
    p.add_argument("graph")
    p.add_argument("--bound", type=int, default=None, help=f"vertex bound (default {size_bound()})")
    p = add("fuzz", _fuzz, "run a seeded property campaign, JSON-lines findings")
    p.add_argument("--props", default=",".join(PROPERTIES), help="comma-separated property names")
    p.add_argument("--seeds", "--seed", dest="seeds", type=_parse_seeds, default=range(0, 100), help="N, A:B or a,b,c")
    p.add_argument("--all", action="store_true", help="also emit passing findings")
    p = add("export-dot", _dot, "render as DOT")
    p.add_argument("graph")
    p.add_argument("--annotate", action="store_true", help="highlight core vertices")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code, text = args.handler(args)
    except UsageError as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 2
    except (StarConvexError, OSError) as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
