"""Small named graphs used in tests, demos and CLI golden files."""

from __future__ import annotations

from .graph import WeightedGraph

# Five vertices, one weight table, two edge sets differing in a single edge.
FIGURE_WEIGHTS = {"v1": 1, "v2": 1, "v3": 2, "v4": 2, "v5": 2}
FIGURE_1_EDGES = [("v1", "v3"), ("v2", "v3"), ("v2", "v4"), ("v3", "v5"), ("v4", "v5")]
FIGURE_2_EDGES = [("v1", "v3"), ("v2", "v3"), ("v2", "v4"), ("v3", "v5"), ("v3", "v4")]


def figure_1() -> WeightedGraph:
    """Star-convex; v3 in the core; single leaf v1."""
    return WeightedGraph(FIGURE_WEIGHTS, FIGURE_1_EDGES)


def figure_2() -> WeightedGraph:
    """Star-convex; v3 in the core; leaves v1 and v5."""
    return WeightedGraph(FIGURE_WEIGHTS, FIGURE_2_EDGES)


def figure_intersection() -> WeightedGraph:
    """Common edges of the two figures: a tree whose core is empty."""
    return WeightedGraph(FIGURE_WEIGHTS, sorted(set(FIGURE_1_EDGES) & set(FIGURE_2_EDGES)))


def no_leaf_cycle() -> WeightedGraph:
    return WeightedGraph({"a": 1, "b": 2, "c": 3}, [("a", "b"), ("b", "c"), ("a", "c")])


def pendant_triangle() -> WeightedGraph:
    """Triangle a(1) b(2) c(3) with pendants p(0) on a and q(4) on c."""
    return WeightedGraph(
        {"a": 1, "b": 2, "c": 3, "p": 0, "q": 4},
        [("a", "b"), ("b", "c"), ("a", "c"), ("a", "p"), ("c", "q")],
    )
