"""Core computation and tree-level structure checks for star-convex graphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from .errors import (
    DisconnectedGraphError,
    DomainError,
    InvariantViolation,
    NoLeavesError,
    NotATreeError,
    NotStarConvexError,
    StarConvexError,
)
from .graph import WeightedGraph, format_weight, is_connected, is_tree, leaves
from .paths import DIRECTIONS, Direction, PathRejected, classify_path, reach_set


@dataclass(frozen=True)
class CoreReport:
    """The core of a graph plus, for each core vertex, the direction used per leaf."""

    core: frozenset[str]
    witnesses: Mapping[str, Mapping[str, Direction]]
    leaves: frozenset[str]

    @property
    def star_convex(self) -> bool:
        return bool(self.core)

    def to_dict(self) -> dict[str, Any]:
        return {
            "star_convex": self.star_convex,
            "core": sorted(self.core),
            "witnesses": {
                u: {leaf: d.value for leaf, d in sorted(per_leaf.items())}
                for u, per_leaf in sorted(self.witnesses.items())
            },
        }


def _check_domain(g: WeightedGraph) -> frozenset[str]:
    if not is_connected(g):
        raise DisconnectedGraphError()
    lv = leaves(g)
    if not lv:
        raise NoLeavesError()
    return lv


def core(g: WeightedGraph) -> CoreReport:
    """Vertices with a monotone path to every leaf, one direction chosen per leaf.

    One pair of reverse sweeps per leaf: ``u`` reaches leaf ``v`` upwards exactly
    when ``v`` reaches ``u`` downwards.
    """
    lv = _check_domain(g)
    # per leaf: vertices that reach it going UP, and going DOWN
    sources = {
        v: {d: reach_set(g, v, d.opposite) for d in DIRECTIONS} for v in sorted(lv)
    }
    members = set(g.vertices)
    for by_dir in sources.values():
        members &= by_dir[Direction.UP] | by_dir[Direction.DOWN]
    witnesses = {
        u: {
            v: Direction.UP if u in by_dir[Direction.UP] else Direction.DOWN
            for v, by_dir in sources.items()
        }
        for u in sorted(members)
    }
    return CoreReport(frozenset(members), witnesses, lv)


def is_star_convex(g: WeightedGraph) -> bool:
    return core(g).star_convex


def tree_path(t: WeightedGraph, a: str, b: str) -> tuple[str, ...]:
    """The unique path between ``a`` and ``b`` in a tree."""
    t.require(a, b)
    parent = {a: a}
    stack = [a]
    while stack and b not in parent:
        v = stack.pop()
        for n in t.neighbors(v):
            if n not in parent:
                parent[n] = v
                stack.append(n)
    out = [b]
    while out[-1] != a:
        out.append(parent[out[-1]])
    return tuple(reversed(out))


class AlignmentViolation(StarConvexError):
    """Two paths out of a leaf core vertex need opposite directions.

    ``up_leaf`` is reachable only upwards and ``down_leaf`` only downwards.
    """

    def __init__(self, vertex: str, up_leaf: str, down_leaf: str) -> None:
        super().__init__(
            f"paths from leaf core vertex {vertex!r} disagree: "
            f"{up_leaf!r} is reached only upwards, {down_leaf!r} only downwards"
        )
        self.vertex = vertex
        self.up_leaf = up_leaf
        self.down_leaf = down_leaf


def check_leaf_core_alignment(t: WeightedGraph, u: str) -> Direction:
    """Common monotone direction of all paths from a leaf core vertex of a tree.

    Every path out of the leaf ``u`` starts with the same edge, so if that edge
    changes weight it fixes the direction of every path.  If ``u`` and its
    neighbour weigh the same, paths may go different ways; that is reported as
    :class:`AlignmentViolation`.  When both directions fit every path, ``UP``
    is returned.
    """
    if not is_tree(t):
        raise NotATreeError()
    report = core(t)
    if u not in report.core or u not in report.leaves:
        raise DomainError(f"vertex {u!r} is not both a leaf and a core vertex")
    only: dict[Direction, str] = {}
    common = set(DIRECTIONS)
    for v in sorted(report.leaves - {u}):
        try:
            dirs = classify_path(t, tree_path(t, u, v)).directions
        except PathRejected as exc:
            raise InvariantViolation(f"path {u}->{v} is not monotone: {exc}") from exc
        if len(dirs) == 1:
            only.setdefault(next(iter(dirs)), v)
        common &= dirs
    if not common:
        raise AlignmentViolation(u, only[Direction.UP], only[Direction.DOWN])
    return next(d for d in DIRECTIONS if d in common)


@dataclass(frozen=True)
class ExtremalReport:
    """Global weight extrema of a tree against extrema over leaves and core."""

    max_all: Fraction
    max_restricted: Fraction
    min_all: Fraction
    min_restricted: Fraction
    argmax: frozenset[str]
    argmin: frozenset[str]

    @property
    def holds(self) -> bool:
        return self.max_all == self.max_restricted and self.min_all == self.min_restricted

    def to_dict(self) -> dict[str, Any]:
        return {
            "holds": self.holds,
            "max_all": format_weight(self.max_all),
            "max_restricted": format_weight(self.max_restricted),
            "min_all": format_weight(self.min_all),
            "min_restricted": format_weight(self.min_restricted),
            "argmax": sorted(self.argmax),
            "argmin": sorted(self.argmin),
        }


def extremal_locus_check(t: WeightedGraph) -> ExtremalReport:
    """Compare max/min weight over the whole tree with max/min over leaves and core.

    On a star-convex tree both pairs coincide. ``argmax``/``argmin`` list the leaf or
    core vertices attaining the restricted extrema.
    """
    if not is_tree(t):
        raise NotATreeError()
    report = core(t)
    if not report.star_convex:
        raise NotStarConvexError()
    w = t.weights
    restricted = report.leaves | report.core
    hi = max(w[v] for v in restricted)
    lo = min(w[v] for v in restricted)
    return ExtremalReport(
        max_all=max(w.values()),
        max_restricted=hi,
        min_all=min(w.values()),
        min_restricted=lo,
        argmax=frozenset(v for v in restricted if w[v] == hi),
        argmin=frozenset(v for v in restricted if w[v] == lo),
    )
