import pytest
from hypothesis import assume, given

from starconvex.core import (
    AlignmentViolation,
    check_leaf_core_alignment,
    core,
    extremal_locus_check,
    is_star_convex,
    tree_path,
)
from starconvex.errors import (
    DisconnectedGraphError,
    DomainError,
    NoLeavesError,
    NotATreeError,
    NotStarConvexError,
)
from starconvex.fixtures import figure_1, figure_2, figure_intersection, no_leaf_cycle, pendant_triangle
from starconvex.graph import WeightedGraph, leaves
from starconvex.oracle import brute_core
from starconvex.paths import Direction, classify_path, monotone_path

from .conftest import connected_graphs, trees

UP, DOWN = Direction.UP, Direction.DOWN


def star(center, *tips):
    weights = {"c": center} | {f"t{i}": w for i, w in enumerate(tips, 1)}
    return WeightedGraph(weights, [("c", f"t{i}") for i in range(1, len(tips) + 1)])


class TestCore:
    def test_figure_1(self):
        report = core(figure_1())
        assert report.core == {"v1", "v3", "v4", "v5"}
        assert report.leaves == {"v1"}
        assert report.star_convex

    def test_figure_2(self):
        report = core(figure_2())
        assert "v3" in report.core
        assert report.core == {"v1", "v3", "v4", "v5"}
        assert report.leaves == {"v1", "v5"}

    def test_figure_intersection_empty(self):
        report = core(figure_intersection())
        assert report.leaves == {"v1", "v4", "v5"}
        assert report.core == frozenset()
        assert not report.star_convex

    def test_star_valley_centre(self):
        assert core(star(0, 1, 2, 3, 4)).core == {"c"}

    def test_star_middle_centre(self):
        assert core(star(2, 1, 3, 4)).core == {"c", "t1"}
        assert core(star(2, 1, 3, 0)).core == {"c", "t2"}

    def test_single_leaf_path(self):
        g = WeightedGraph({"a": 1, "b": 5, "c": 2, "d": 2}, [("a", "b"), ("b", "c"), ("c", "d"), ("d", "b")])
        assert leaves(g) == {"a"}
        assert core(g).core == {"a", "b"}

    def test_pendant_triangle(self):
        assert core(pendant_triangle()).core == {"a", "b", "c", "p", "q"}

    def test_no_leaves(self):
        with pytest.raises(NoLeavesError, match="no leaf"):
            core(no_leaf_cycle())

    def test_lone_vertex(self):
        with pytest.raises(NoLeavesError):
            core(WeightedGraph({"a": 1}))

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            core(WeightedGraph({"a": 1, "b": 1, "c": 1, "d": 1}, [("a", "b"), ("c", "d")]))

    def test_report_json(self):
        doc = core(figure_2()).to_dict()
        assert doc["star_convex"] is True
        assert doc["core"] == ["v1", "v3", "v4", "v5"]
        assert doc["witnesses"]["v3"] == {"v1": "DOWN", "v5": "UP"}

    @given(connected_graphs(max_size=7))
    def test_matches_brute_force(self, g):
        assume(leaves(g))
        assert core(g).core == brute_core(g)

    @given(connected_graphs(max_size=7))
    def test_witness_directions_are_realised(self, g):
        assume(leaves(g))
        report = core(g)
        for u, per_leaf in report.witnesses.items():
            assert set(per_leaf) == report.leaves
            for v, d in per_leaf.items():
                p = monotone_path(g, u, v, d)
                assert p is not None and d in classify_path(g, p.vertices).directions

    @given(connected_graphs(max_size=7))
    def test_relabelling_invariance(self, g):
        assume(leaves(g))
        rename = {v: f"x{v}" for v in g}
        h = WeightedGraph({rename[v]: w for v, w in g.weights.items()}, [(rename[a], rename[b]) for a, b in g.edges])
        assert core(h).core == {rename[v] for v in core(g).core}


class TestTreePath:
    def test_figure_intersection(self):
        assert tree_path(figure_intersection(), "v1", "v4") == ("v1", "v3", "v2", "v4")
        assert tree_path(figure_intersection(), "v5", "v5") == ("v5",)


class TestAlignment:
    def test_increasing_path(self):
        g = WeightedGraph({"a": 1, "b": 2, "c": 3}, [("a", "b"), ("b", "c")])
        assert check_leaf_core_alignment(g, "a") == UP
        assert check_leaf_core_alignment(g, "c") == DOWN

    def test_star(self):
        assert check_leaf_core_alignment(star(2, 1, 3, 4), "t1") == UP

    def test_flat_returns_up(self):
        g = WeightedGraph({"a": 2, "b": 2}, [("a", "b")])
        assert check_leaf_core_alignment(g, "a") == UP

    def test_plateau_at_leaf_breaks_alignment(self):
        g = WeightedGraph({"u": 1, "x": 1, "y": 2, "z": 0}, [("u", "x"), ("x", "y"), ("x", "z")])
        assert "u" in core(g).core
        with pytest.raises(AlignmentViolation) as info:
            check_leaf_core_alignment(g, "u")
        assert (info.value.vertex, info.value.up_leaf, info.value.down_leaf) == ("u", "y", "z")

    def test_not_a_tree(self):
        with pytest.raises(NotATreeError):
            check_leaf_core_alignment(figure_2(), "v1")

    def test_non_core_leaf(self):
        g = WeightedGraph({"a": 1, "b": 3, "c": 2, "d": 0}, [("a", "b"), ("b", "c"), ("c", "d")])
        assert "a" not in core(g).core
        with pytest.raises(DomainError):
            check_leaf_core_alignment(g, "a")

    def test_internal_vertex(self):
        with pytest.raises(DomainError):
            check_leaf_core_alignment(star(5, 1, 2, 3), "c")

    @given(trees())
    def test_violation_only_on_plateau(self, t):
        report = core(t)
        for u in sorted(report.core & report.leaves):
            try:
                d = check_leaf_core_alignment(t, u)
            except AlignmentViolation:
                (n,) = t.neighbors(u)
                assert t.weight(n) == t.weight(u)
            else:
                for v in report.leaves - {u}:
                    assert d in classify_path(t, tree_path(t, u, v)).directions


class TestExtremal:
    def test_spider(self):
        t = WeightedGraph(
            {"h": 5, "x": 3, "t1": 1, "y": 4, "t2": 2},
            [("h", "x"), ("x", "t1"), ("h", "y"), ("y", "t2")],
        )
        r = extremal_locus_check(t)
        assert r.holds
        assert (r.max_all, r.min_all) == (5, 1)
        assert r.argmax == {"h"} and r.argmin == {"t1"}

    def test_star(self):
        r = extremal_locus_check(star(0, 1, 2, 3))
        assert r.holds and r.argmin == {"c"} and r.argmax == {"t3"}

    def test_not_star_convex(self):
        with pytest.raises(NotStarConvexError):
            extremal_locus_check(figure_intersection())

    def test_not_a_tree(self):
        with pytest.raises(NotATreeError):
            extremal_locus_check(figure_1())

    def test_json(self):
        doc = extremal_locus_check(star(0, 1, 2)).to_dict()
        assert doc["holds"] is True and doc["max_all"] == "2"

    @given(trees(max_size=9))
    def test_holds_on_star_convex_trees(self, t):
        assume(is_star_convex(t))
        assert extremal_locus_check(t).holds
