"""Witness trees: star-convex spanning subtrees of the leaves of a star-convex graph.

A graph is star-convex exactly when it contains a star-convex tree with the same
leaf set.  :func:`extract_witness_tree` builds one; :func:`verify_witness` checks
a candidate.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Any, Iterable, Union

from .core import core
from .errors import (
    DomainError,
    GraphFormatError,
    InvariantViolation,
    NotATreeError,
    NotStarConvexError,
    UnknownVertexError,
)
from .graph import (
    WeightedGraph,
    graph_from_dict,
    graph_to_dict,
    induced_subgraph,
    is_tree,
    leaves,
)
from .paths import PathRejected, classify_path, monotone_path


@dataclass(frozen=True)
class WitnessTree:
    tree: WeightedGraph
    root: str
    leaves: frozenset[str]

    def to_dict(self) -> dict[str, Any]:
        return {**graph_to_dict(self.tree), "root": self.root}

    @classmethod
    def from_dict(cls, doc: Any) -> WitnessTree:
        tree = graph_from_dict(doc)
        root = doc.get("root")
        if not isinstance(root, str) or root not in tree:
            raise GraphFormatError("witness tree needs a 'root' naming one of its vertices", root)
        return cls(tree, root, leaves(tree))


def steiner_subtree(t: WeightedGraph, terminals: Iterable[str]) -> WeightedGraph:
    """Smallest subtree of the tree ``t`` containing every terminal."""
    terms = set(terminals)
    if not is_tree(t):
        raise NotATreeError()
    t.require(*terms)
    if len(terms) < 2:
        raise DomainError("need at least two terminals")
    anchor = min(terms)
    parent: dict[str, str | None] = {anchor: None}
    order = [anchor]
    for v in order:  # grows while iterating: BFS order
        for n in sorted(t.neighbors(v)):
            if n not in parent:
                parent[n] = v
                order.append(n)
    keep = set()
    for v in reversed(order):
        if v in terms or v in keep:
            keep.add(v)
            if parent[v] is not None:
                keep.add(parent[v])
    # Rooted at a terminal, so the marked set is the union of anchor-terminal paths.
    return induced_subgraph(t, keep)


def _root_path(parent: dict[str, str | None], v: str) -> list[str]:
    out = [v]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])
    return out[::-1]


def extract_witness_tree(
    g: WeightedGraph,
    root: str | None = None,
    *,
    check_invariants: bool = False,
) -> WitnessTree:
    """Build a star-convex subtree of ``g`` whose leaves are exactly the leaves of ``g``.

    Monotone paths from the root to each leaf (in lexicographic leaf order) are
    grafted onto a growing tree at the last vertex they share with it, so no cycle
    ever forms.  The result is then trimmed to the subtree spanning the leaves; the
    returned root is the nearest vertex of the trimmed tree to the starting root.

    With ``check_invariants`` every root-to-vertex path of the growing tree is
    re-classified after each graft and :class:`InvariantViolation` is raised if one
    is not monotone.
    """
    report = core(g)
    if not report.star_convex:
        raise NotStarConvexError()
    if len(report.leaves) < 2:
        raise DomainError("witness trees need a graph with at least two leaves")
    if root is None:
        root = min(report.core)
    elif root not in g:
        raise UnknownVertexError(root)
    elif root not in report.core:
        raise DomainError(f"vertex {root!r} is not in the core")

    parent: dict[str, str | None] = {root: None}
    for leaf in sorted(report.leaves):
        preferred = report.witnesses[root][leaf]
        path = monotone_path(g, root, leaf, preferred)
        if path is None:  # pragma: no cover - the witness direction guarantees a path
            raise InvariantViolation(f"no {preferred.value} path from {root} to {leaf}")
        seq = path.vertices
        last = max(i for i, v in enumerate(seq) if v in parent)
        for i in range(last + 1, len(seq)):
            parent[seq[i]] = seq[i - 1]
        if check_invariants:
            _check_root_paths(g, parent)

    grown = WeightedGraph(
        {v: g.weight(v) for v in parent},
        [(p, v) for v, p in parent.items() if p is not None],
    )
    trimmed = steiner_subtree(grown, report.leaves)
    return WitnessTree(trimmed, _project(grown, root, trimmed), leaves(trimmed))


def _check_root_paths(g: WeightedGraph, parent: dict[str, str | None]) -> None:
    for v in parent:
        try:
            classify_path(g, _root_path(parent, v))
        except PathRejected as exc:
            raise InvariantViolation(f"root path to {v!r} is not monotone: {exc}") from exc


def _project(t: WeightedGraph, v: str, sub: WeightedGraph) -> str:
    """Vertex of the subtree ``sub`` closest to ``v`` within the tree ``t``."""
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        if x in sub:
            return x
        for n in sorted(t.neighbors(x)):
            if n not in seen:
                seen.add(n)
                queue.append(n)
    raise InvariantViolation("subtree is not reachable from the root")  # pragma: no cover


@dataclass(frozen=True)
class WitnessVerdict:
    """Outcome of :func:`verify_witness`; falsy when a condition failed."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_witness(g: WeightedGraph, t: Union[WitnessTree, WeightedGraph]) -> WitnessVerdict:
    """Check that ``t`` certifies ``g``: a star-convex subtree with the same leaves.

    For a :class:`WitnessTree` the declared root must also lie in the tree's core.
    """
    tree = t.tree if isinstance(t, WitnessTree) else t
    if not tree.is_subgraph_of(g):
        return WitnessVerdict(False, "not a subgraph")
    if not is_tree(tree):
        return WitnessVerdict(False, "not a tree")
    if len(tree) < 2:
        return WitnessVerdict(False, "tree has no leaves")
    tree_core = core(tree).core
    if not tree_core:
        return WitnessVerdict(False, "tree is not star-convex")
    if leaves(tree) != leaves(g):
        return WitnessVerdict(False, "leaf sets differ")
    if isinstance(t, WitnessTree) and t.root not in tree_core:
        return WitnessVerdict(False, "root is not in the tree's core")
    return WitnessVerdict(True)

