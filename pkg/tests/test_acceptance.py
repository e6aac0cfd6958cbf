"""Exit criteria of the package, one test (or pair of tests) per criterion.

Each test is tagged ``acceptance(number, title)``; the terminal summary prints one
``[PASS]``/``[FAIL]`` line per criterion.
"""

from __future__ import annotations

import random
import time
from pathlib import Path

import pytest

from starconvex.cli import run
from starconvex.core import (
    AlignmentViolation,
    check_leaf_core_alignment,
    core,
    extremal_locus_check,
    is_star_convex,
)
from starconvex.fixtures import figure_1, figure_2
from starconvex.fuzz import (
    break_class,
    compare_cores,
    run_campaign,
    sample_class,
    sample_graph,
    sample_overlapping_pair,
    sample_star_convex_graph,
    sample_star_convex_tree,
    weight_conservation,
)
from starconvex.graph import WeightedGraph, is_tree, leaves, serialize_graph
from starconvex.oracle import (
    GeneratorParams,
    brute_core,
    exhaustive_connected_graphs,
    random_convex_class,
    random_graph,
)
from starconvex.ops import graph_intersection, graph_union, overlap_analysis
from starconvex.sequences import embed, validate_class
from starconvex.witness import extract_witness_tree, steiner_subtree, verify_witness

from .conftest import FIXTURES

N = 1000


def random_spanning_tree(g: WeightedGraph, rng: random.Random) -> WeightedGraph:
    """Kruskal over a shuffled edge list."""
    root = {v: v for v in g}

    def find(v: str) -> str:
        while root[v] != v:
            root[v] = root[root[v]]
            v = root[v]
        return v

    edges = list(g.edges)
    rng.shuffle(edges)
    kept = []
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            root[ra] = rb
            kept.append((a, b))
    return WeightedGraph(g.weights, kept)


@pytest.mark.acceptance(1, "figure graphs: cores, intersection and union")
def test_figure_fixtures():
    start = time.perf_counter()
    g1, g2 = figure_1(), figure_2()
    for g in (g1, g2):
        c = core(g).core
        assert "v3" in c
        assert c == brute_core(g)
    inter = graph_intersection(g1, g2)
    assert core(inter).core == frozenset() == brute_core(inter)
    union = graph_union(g1, g2)
    assert is_star_convex(union)
    assert core(union).core == brute_core(union)
    report = overlap_analysis(g1, g2)
    assert report.union_star_convex and not report.intersection_star_convex
    assert time.perf_counter() - start < 1.0


@pytest.mark.acceptance(2, "fast core equals brute-force core")
def test_oracle_equivalence():
    start = time.perf_counter()
    swept = 0
    for g in exhaustive_connected_graphs(6):
        fast, brute, agree = compare_cores(g)
        assert agree, serialize_graph(g)
        swept += 1
    assert swept == 7958
    for seed in range(10_000):
        g = sample_graph(seed)
        assert len(g) <= 8
        fast, brute, agree = compare_cores(g)
        assert agree, serialize_graph(g)
    assert time.perf_counter() - start < 60.0


@pytest.mark.acceptance(3, "witness trees extract and verify")
def test_witness_round_trip():
    for seed in range(N):
        g = sample_star_convex_graph(seed)
        assert len(leaves(g)) >= 2
        wt = extract_witness_tree(g, check_invariants=True)  # raises InvariantViolation on a bad graft
        assert verify_witness(g, wt).ok
        assert wt.tree.is_subgraph_of(g)
        assert is_tree(wt.tree)
        assert leaves(wt.tree) == leaves(g)
        assert wt.root in core(wt.tree).core


@pytest.mark.acceptance(4, "an accepted witness implies a star-convex graph")
def test_witness_converse():
    accepted = 0
    for seed in range(N):
        g = sample_star_convex_graph(seed)
        wt = extract_witness_tree(g)
        if verify_witness(g, wt):
            accepted += 1
            assert is_star_convex(g)
        # arbitrary candidate trees drawn from arbitrary graphs
        h = sample_graph(seed)
        if len(leaves(h)) < 2:
            continue
        tree = random_spanning_tree(h, random.Random(seed))
        candidate = steiner_subtree(tree, leaves(h))
        if verify_witness(h, candidate):
            accepted += 1
            assert is_star_convex(h)
    assert accepted >= N


@pytest.mark.acceptance(5, "convex classes embed onto spiders")
def test_class_embedding():
    for seed in range(N):
        c = sample_class(seed)
        assert c.n <= 5 and c.half_length <= 6
        emb = embed(c)
        assert emb.spec.legs == 2 * c.n and emb.spec.leg_length == c.half_length
        assert emb.spec.hub in emb.report.core
        assert weight_conservation(c, emb.graph, emb.spec.hub)

        broken, kind = break_class(c, seed)
        report = validate_class(broken)
        assert not report.valid
        located = [v for v in report.violations if v.kind == kind and v.sequence is not None]
        assert located, (kind, report.to_dict())
        for v in located:
            seq = broken.sequences[v.sequence - 1]
            original = c.sequences[v.sequence - 1]
            x = seq[v.index - 1]
            if kind == "minimum":
                assert x < broken.hub_value
            elif kind == "middle":
                assert v.index == c.half_length + 1 and x != broken.hub_value
            else:
                assert seq != original
                i = v.index - 1
                assert 2 * seq[i] > seq[i - 1] + seq[i + 1]


@pytest.mark.acceptance(6, "union of star-convex graphs sharing a core vertex")
def test_union_with_shared_core():
    for seed in range(N):
        g1, g2 = sample_overlapping_pair(seed)
        assert core(g1).core & core(g2).core
        assert leaves(graph_union(g1, g2))
        report = overlap_analysis(g1, g2)  # raises InvariantViolation if the union fails
        assert report.union_star_convex


@pytest.mark.acceptance(7, "tree structure: leaf-core alignment and extremal locus")
def test_leaf_core_alignment():
    violations = []
    for seed in range(N):
        t = sample_star_convex_tree(seed)
        report = core(t)
        for u in sorted(report.core & report.leaves):
            try:
                check_leaf_core_alignment(t, u)
            except AlignmentViolation as exc:
                violations.append((seed, str(exc)))
    assert not violations, f"{len(violations)} alignment violations, first: {violations[0]}"


@pytest.mark.acceptance(7, "tree structure: leaf-core alignment and extremal locus")
def test_extremal_locus():
    for seed in range(N):
        t = sample_star_convex_tree(seed)
        ext = extremal_locus_check(t)
        assert ext.max_all == ext.max_restricted
        assert ext.min_all == ext.min_restricted


@pytest.mark.acceptance(8, "subgraph core probe finds a counterexample")
def test_probe_counterexample():
    findings = run_campaign(["subgraph-core"], range(200))
    fixture = findings[0]
    assert fixture.seed is None and fixture.verdict == "counterexample"
    assert fixture.witness["witness"] == {"vertex": "v1", "leaf": "v3"}
    sampled = [f for f in findings[1:] if f.verdict == "counterexample"]
    assert sampled


def _cli_invocations() -> list[list[str]]:
    graphs = sorted(p.name for p in FIXTURES.glob("*.json") if not p.name.startswith("class_"))
    calls = []
    for name in graphs:
        for cmd in (["check"], ["core"], ["extract-tree"], ["oracle"], ["export-dot"], ["export-dot", "--annotate"]):
            calls.append([*cmd, str(FIXTURES / name)])
    for name in ("class_pair.json", "class_bad_middle.json"):
        calls += [["embed", str(FIXTURES / name)], ["validate-class", str(FIXTURES / name)]]
    pair = [str(FIXTURES / "figure_1.json"), str(FIXTURES / "figure_2.json")]
    calls += [["union", *pair, "--analyze"], ["intersect", *pair, "--analyze"]]
    calls += [["verify-tree", str(FIXTURES / "figure_2.json"), str(FIXTURES / "figure_2_tree.json")]]
    calls += [["fuzz", "--seeds", "0:10", "--all"]]
    return calls


@pytest.mark.acceptance(9, "deterministic CLI output and generators")
def test_determinism(tmp_path: Path):
    for i, argv in enumerate(_cli_invocations()):
        outputs = []
        for attempt in range(2):
            target = tmp_path / f"{i}-{attempt}.out"
            code = run([*argv, "--output", str(target)])
            outputs.append((code, target.read_bytes() if target.exists() else None))
        assert outputs[0] == outputs[1], argv
    for seed in range(200):
        p = GeneratorParams(seed=seed)
        assert serialize_graph(random_graph(p)) == serialize_graph(random_graph(p))
        a = random_convex_class(3, 4, seed).to_dict()
        assert a == random_convex_class(3, 4, seed).to_dict()
