"""Union and intersection of weighted graphs and how star-convexity survives them."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any

from .core import core
from .errors import (
    DomainError,
    InvariantViolation,
    NotStarConvexError,
    StarConvexError,
    WeightConflictError,
)
from .graph import WeightedGraph, format_weight, leaves, serialize_graph
from .paths import Direction, reach_set


def _check_weights(g1: WeightedGraph, g2: WeightedGraph) -> None:
    for v in sorted(set(g1.vertices) & set(g2.vertices)):
        if g1.weight(v) != g2.weight(v):
            raise WeightConflictError(v, format_weight(g1.weight(v)), format_weight(g2.weight(v)))


def graph_union(g1: WeightedGraph, g2: WeightedGraph) -> WeightedGraph:
    """Vertex and edge sets united by id; shared vertices must agree on weight."""
    _check_weights(g1, g2)
    return WeightedGraph({**g1.weights, **g2.weights}, sorted(set(g1.edges) | set(g2.edges)))


def graph_intersection(g1: WeightedGraph, g2: WeightedGraph) -> WeightedGraph:
    _check_weights(g1, g2)
    shared = set(g1.vertices) & set(g2.vertices)
    return WeightedGraph(
        {v: g1.weight(v) for v in shared}, sorted(set(g1.edges) & set(g2.edges))
    )


def _safe_core(g: WeightedGraph) -> tuple[frozenset[str], str | None]:
    """Core of ``g``, or an empty core plus the reason the graph is out of domain."""
    try:
        return core(g).core, None
    except StarConvexError as exc:
        return frozenset(), str(exc)


@dataclass(frozen=True)
class OverlapReport:
    g1_core: frozenset[str]
    g2_core: frozenset[str]
    union_core: frozenset[str]
    intersection_core: frozenset[str]
    findings: tuple[str, ...] = field(default=())

    @property
    def core_intersection(self) -> frozenset[str]:
        return self.g1_core & self.g2_core

    @property
    def union_star_convex(self) -> bool:
        return bool(self.union_core)

    @property
    def intersection_star_convex(self) -> bool:
        return bool(self.intersection_core)

    def to_dict(self) -> dict[str, Any]:
        return {
            "core_intersection": sorted(self.core_intersection),
            "g1_core": sorted(self.g1_core),
            "g2_core": sorted(self.g2_core),
            "union_core": sorted(self.union_core),
            "union_star_convex": self.union_star_convex,
            "intersection_core": sorted(self.intersection_core),
            "intersection_star_convex": self.intersection_star_convex,
            "findings": list(self.findings),
        }


def overlap_analysis(g1: WeightedGraph, g2: WeightedGraph) -> OverlapReport:
    """Cores of both inputs, of their union and of their intersection.

    Out-of-domain inputs or results (no leaves, disconnected) get an empty core
    and a line in ``findings`` instead of an exception.  When both inputs are
    star-convex, share a core vertex and the union has a leaf, the union must
    be star-convex; :class:`InvariantViolation` is raised otherwise.
    """
    union = graph_union(g1, g2)
    inter = graph_intersection(g1, g2)
    findings = []
    cores = {}
    for name, g in (("g1", g1), ("g2", g2), ("union", union), ("intersection", inter)):
        cores[name], problem = _safe_core(g)
        if problem:
            findings.append(f"{name}: {problem}")
        elif not cores[name]:
            findings.append(f"{name}: graph is not star-convex")
    report = OverlapReport(
        g1_core=cores["g1"],
        g2_core=cores["g2"],
        union_core=cores["union"],
        intersection_core=cores["intersection"],
        findings=tuple(findings),
    )
    if report.core_intersection and leaves(union) and not report.union_star_convex:
        raise InvariantViolation(
            "inputs share core vertices "
            f"{sorted(report.core_intersection)} but their union is not star-convex"
        )
    return report


# -- subgraph core probe ------------------------------------------------------------


@dataclass(frozen=True)
class ProbeResult:
    """Outcome of testing whether the core of a subgraph sits inside the core of the graph.

    On a counterexample, ``vertex`` is in the subgraph's core but not the
    supergraph's and ``leaf`` is a supergraph leaf it cannot reach monotonically.
    """

    holds: bool
    vertex: str | None = None
    leaf: str | None = None

    @property
    def verdict(self) -> str:
        return "PASS" if self.holds else "COUNTEREXAMPLE"

    def to_dict(self) -> dict[str, Any]:
        return {"verdict": self.verdict, "vertex": self.vertex, "leaf": self.leaf}


def subgraph_core_probe(g1: WeightedGraph, g2: WeightedGraph) -> ProbeResult:
    """For star-convex ``g1`` contained in star-convex ``g2``, test ``C(g1) <= C(g2)``.

    This containment is not a theorem: a path 1-3 inside the path 1-3-2 already
    breaks it, so the result is a finding, never an assertion.
    """
    if not g1.is_subgraph_of(g2):
        raise DomainError("first graph is not a subgraph of the second")
    c1, c2 = core(g1), core(g2)
    if not c1.star_convex or not c2.star_convex:
        raise NotStarConvexError()
    escaped = sorted(c1.core - c2.core)
    if not escaped:
        return ProbeResult(True)
    u = escaped[0]
    reach = reach_set(g2, u, Direction.UP) | reach_set(g2, u, Direction.DOWN)
    leaf = min(v for v in c2.leaves if v not in reach)
    return ProbeResult(False, u, leaf)


def graph_digest(g: WeightedGraph) -> str:
    return hashlib.sha256(serialize_graph(g).encode()).hexdigest()


def probe_record(g1: WeightedGraph, g2: WeightedGraph, result: ProbeResult) -> dict[str, Any]:
    return {
        "g1": graph_digest(g1),
        "g2": graph_digest(g2),
        "verdict": result.verdict,
        "witness": None if result.holds else {"vertex": result.vertex, "leaf": result.leaf},
    }


def append_probe_log(path: str, record: dict[str, Any]) -> None:
    """Append one record to a JSON-lines counterexample log."""
    with open(path, "a", encoding="utf-8") as f:
        f.write(json.dumps(record, sort_keys=True) + "\n")

