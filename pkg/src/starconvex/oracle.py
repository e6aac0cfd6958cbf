"""Brute-force ground truth and seeded input generators.

Everything here works straight from the definitions (enumerate simple paths,
test each for monotone weights) and deliberately avoids the reachability
machinery in :mod:`starconvex.paths`, so agreement between the two is evidence.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate, product
from typing import Iterator, Sequence

from .errors import NoLeavesError, StarConvexError
from .graph import WeightedGraph
from .sequences import ConvexSequenceClass

DEFAULT_BOUND = 10
BOUND_ENV = "STARCONVEX_ORACLE_MAX_VERTICES"


class OracleTooLarge(StarConvexError):
    def __init__(self, size: int, bound: int) -> None:
        super().__init__(f"graph has {size} vertices; exhaustive bound is {bound}")


def size_bound() -> int:
    """Exhaustive-enumeration vertex bound, overridable through the environment."""
    raw = os.environ.get(BOUND_ENV)
    return int(raw) if raw else DEFAULT_BOUND


def _guard(g: WeightedGraph, bound: int | None) -> None:
    limit = size_bound() if bound is None else bound
    if len(g) > limit:
        raise OracleTooLarge(len(g), limit)


def _adjacency(g: WeightedGraph) -> dict[str, list[str]]:
    adj: dict[str, list[str]] = {v: [] for v in g.vertices}
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    return {v: sorted(ns) for v, ns in adj.items()}


def _simple_paths(adj: dict[str, list[str]], start: str, end: str) -> Iterator[tuple[str, ...]]:
    path = [start]
    on_path = {start}

    def extend() -> Iterator[tuple[str, ...]]:
        here = path[-1]
        if here == end:
            yield tuple(path)
            return
        for n in adj[here]:
            if n not in on_path:
                path.append(n)
                on_path.add(n)
                yield from extend()
                on_path.discard(path.pop())

    yield from extend()


def enumerate_simple_paths(
    g: WeightedGraph, start: str, end: str, *, bound: int | None = None
) -> list[tuple[str, ...]]:
    """All simple paths from ``start`` to ``end`` in lexicographic order."""
    _guard(g, bound)
    g.require(start, end)
    return sorted(_simple_paths(_adjacency(g), start, end))


def is_monotone_sequence(weights: Sequence[Fraction]) -> bool:
    pairs = list(zip(weights, weights[1:]))
    return all(a <= b for a, b in pairs) or all(a >= b for a, b in pairs)


def brute_core(g: WeightedGraph, *, bound: int | None = None) -> frozenset[str]:
    """Vertices from which every leaf lies at the end of some monotone simple path."""
    _guard(g, bound)
    adj = _adjacency(g)
    leaf_set = [v for v, ns in adj.items() if len(ns) == 1]
    if not leaf_set:
        raise NoLeavesError()
    w = g.weights

    def joined(u: str, v: str) -> bool:
        return any(
            is_monotone_sequence([w[x] for x in p]) for p in _simple_paths(adj, u, v)
        )

    return frozenset(u for u in adj if all(joined(u, v) for v in leaf_set))


# -- generators ------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorParams:
    vertex_count_range: tuple[int, int] = (2, 8)
    weight_grid: tuple[Fraction, ...] = tuple(Fraction(k) for k in range(4))
    edge_density: Fraction = Fraction(1, 5)
    seed: int = 0

    def to_dict(self) -> dict:
        return {
            "vertex_count_range": list(self.vertex_count_range),
            "weight_grid": [str(x) for x in self.weight_grid],
            "edge_density": str(self.edge_density),
            "seed": self.seed,
        }


def vertex_ids(n: int, prefix: str = "v") -> list[str]:
    """``v1 .. vn``, zero-padded so lexicographic order matches numeric order."""
    width = len(str(n))
    return [f"{prefix}{i:0{width}d}" for i in range(1, n + 1)]


def random_connected_graph(
    rng: random.Random,
    weights: dict[str, Fraction],
    edge_density: Fraction,
) -> WeightedGraph:
    """Random spanning tree over ``weights``' vertices plus each other pair w.p. density."""
    ids = sorted(weights)
    order = ids[:]
    rng.shuffle(order)
    edges = {tuple(sorted((order[k], order[rng.randrange(k)]))) for k in range(1, len(order))}
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            if (a, b) not in edges and rng.random() < edge_density:
                edges.add((a, b))
    return WeightedGraph(weights, sorted(edges))


def random_graph(p: GeneratorParams) -> WeightedGraph:
    lo, hi = p.vertex_count_range
    if lo < 1 or hi < lo:
        raise ValueError(f"empty vertex count range {p.vertex_count_range}")
    if not p.weight_grid:
        raise ValueError("empty weight grid")
    rng = random.Random(p.seed)
    n = rng.randint(lo, hi)
    weights = {v: rng.choice(p.weight_grid) for v in vertex_ids(n)}
    return random_connected_graph(rng, weights, p.edge_density)


HUB_GRID = tuple(Fraction(k) for k in range(4))
STEP_GRID = tuple(Fraction(k, 2) for k in range(5))


def random_convex_class(
    n: int,
    half_length: int,
    seed: int,
    *,
    hub_grid: Sequence[Fraction] = HUB_GRID,
    step_grid: Sequence[Fraction] = STEP_GRID,
) -> ConvexSequenceClass:
    """A class satisfying the middle-value conditions by construction.

    Each side of each sequence climbs away from the shared middle value by
    steps drawn from ``step_grid`` and sorted, so consecutive differences never
    decrease.
    """
    if n < 1 or half_length < 1:
        raise ValueError("need n >= 1 and half_length >= 1")
    rng = random.Random(seed)
    u = rng.choice(hub_grid)
    seqs = []
    for _ in range(n):
        left = list(accumulate(sorted(rng.choice(step_grid) for _ in range(half_length)), initial=u))
        right = list(accumulate(sorted(rng.choice(step_grid) for _ in range(half_length)), initial=u))
        seqs.append(tuple(left[:0:-1] + right))
    return ConvexSequenceClass(tuple(seqs), u)


def exhaustive_connected_graphs(
    max_vertices: int = 6, weight_grid: Sequence[Fraction] = (Fraction(1), Fraction(2))
) -> Iterator[WeightedGraph]:
    """Every connected graph on at most ``max_vertices`` vertices, up to isomorphism,
    under every assignment of weights from ``weight_grid``."""
    import networkx as nx

    if max_vertices > 7:
        raise ValueError("the graph atlas only covers graphs with at most 7 vertices")
    for shape in nx.graph_atlas_g():
        n = shape.number_of_nodes()
        if n == 0 or n > max_vertices or not nx.is_connected(shape):
            continue
        ids = vertex_ids(n)
        edges = [(ids[a], ids[b]) for a, b in shape.edges()]
        for ws in product(weight_grid, repeat=n):
            yield WeightedGraph(dict(zip(ids, ws)), edges)

