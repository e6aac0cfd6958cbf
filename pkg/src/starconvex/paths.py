"""Weight-monotone paths, decided as reachability in an edge-oriented digraph.

Orienting every edge towards the not-smaller endpoint (``UP``) or the not-larger
one (``DOWN``) turns "is there a monotone simple path from a to b" into plain
directed reachability: a directed walk always contains a simple directed path
between the same endpoints, and that path is still monotone.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import StarConvexError
from .graph import WeightedGraph


class Direction(enum.Enum):
    UP = "UP"
    DOWN = "DOWN"

    @property
    def opposite(self) -> Direction:
        return Direction.DOWN if self is Direction.UP else Direction.UP

    def allows(self, a, b) -> bool:
        """Whether stepping from weight ``a`` to weight ``b`` respects this direction."""
        return a <= b if self is Direction.UP else a >= b


# Preference order wherever both directions qualify.
DIRECTIONS = (Direction.UP, Direction.DOWN)


@dataclass(frozen=True)
class MonotonePath:
    vertices: tuple[str, ...]
    directions: frozenset[Direction]

    @property
    def source(self) -> str:
        return self.vertices[0]

    @property
    def target(self) -> str:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices)


class PathRejected(StarConvexError):
    """``classify_path`` refused a sequence; ``index`` is the 0-based offending position."""

    def __init__(self, reason: str, index: int) -> None:
        super().__init__(f"{reason} at index {index}")
        self.reason = reason
        self.index = index


def oriented_digraph(g: WeightedGraph, d: Direction) -> dict[str, frozenset[str]]:
    """Out-neighbour map: arc a->b iff {a, b} is an edge and ``d`` allows w(a) to w(b)."""
    w = g.weights
    return {v: frozenset(n for n in g.neighbors(v) if d.allows(w[v], w[n])) for v in g}


def _bfs(arcs: Mapping[str, frozenset[str]], start: str) -> dict[str, int]:
    dist = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for n in arcs[v]:
            if n not in dist:
                dist[n] = dist[v] + 1
                queue.append(n)
    return dist


def reach_set(g: WeightedGraph, source: str, d: Direction) -> frozenset[str]:
    """All vertices joined to ``source`` by a simple path that is monotone in ``d``."""
    g.require(source)
    return frozenset(_bfs(oriented_digraph(g, d), source))


def monotone_path(g: WeightedGraph, start: str, end: str, d: Direction) -> MonotonePath | None:
    """Shortest ``d``-monotone path from ``start`` to ``end``, or ``None``.

    Among shortest paths the lexicographically smallest vertex sequence wins.
    """
    g.require(start, end)
    # Distances to `end` along arcs reversed; the reverse of the d-digraph is the
    # opposite-direction digraph.
    to_end = _bfs(oriented_digraph(g, d.opposite), end)
    if start not in to_end:
        return None
    arcs = oriented_digraph(g, d)
    seq = [start]
    while seq[-1] != end:
        here = seq[-1]
        seq.append(min(n for n in arcs[here] if to_end.get(n) == to_end[here] - 1))
    return classify_path(g, seq)


def classify_path(g: WeightedGraph, vs: Sequence[str]) -> MonotonePath:
    """Check that ``vs`` is a simple monotone path in ``g`` and report its directions.

    Raises :class:`PathRejected` at the first position where adjacency, simplicity
    or monotonicity (in both directions) fails.
    """
    if not vs:
        raise ValueError("empty vertex sequence")
    g.require(*vs)
    w = g.weights
    alive = set(DIRECTIONS)
    seen = {vs[0]}
    for i in range(1, len(vs)):
        prev, cur = vs[i - 1], vs[i]
        if cur in seen:
            raise PathRejected("repeated vertex", i)
        if not g.has_edge(prev, cur):
            raise PathRejected("non-adjacent consecutive vertices", i)
        seen.add(cur)
        alive = {d for d in alive if d.allows(w[prev], w[cur])}
        if not alive:
            raise PathRejected("weights not monotone", i)
    return MonotonePath(tuple(vs), frozenset(alive))
