"""Seeded samplers for constrained inputs and the property fuzz campaign.

Every property runs from a single integer seed; a finding records that seed so
any failure can be replayed exactly.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator

from .core import (
    AlignmentViolation,
    check_leaf_core_alignment,
    core,
    extremal_locus_check,
    is_star_convex,
)
from .errors import InvariantViolation, StarConvexError
from .graph import WeightedGraph, graph_to_dict, induced_subgraph, is_connected, leaves
from .oracle import (
    GeneratorParams,
    brute_core,
    random_connected_graph,
    random_convex_class,
    random_graph,
    vertex_ids,
)
from .ops import graph_union, overlap_analysis, probe_record, subgraph_core_probe
from .sequences import (
    ConvexSequenceClass,
    InvalidClassError,
    embed,
    leg_vertex,
    validate_class,
)
from .witness import extract_witness_tree, verify_witness

WEIGHTS_0_3 = tuple(Fraction(k) for k in range(4))
MAX_ATTEMPTS = 10_000


def _subseeds(seed: int) -> Iterator[int]:
    rng = random.Random(seed)
    for _ in range(MAX_ATTEMPTS):
        yield rng.getrandbits(64)
    raise RuntimeError(f"seed {seed}: no acceptable sample in {MAX_ATTEMPTS} attempts")


def _leafy_params(seed: int, max_vertices: int = 8) -> GeneratorParams:
    return GeneratorParams((2, max_vertices), WEIGHTS_0_3, Fraction(1, 5), seed)


# -- samplers ---------------------------------------------------------------------------


def sample_graph(seed: int, max_vertices: int = 8) -> WeightedGraph:
    """A random connected graph with 2..max_vertices vertices and weights in 0..3."""
    return random_graph(_leafy_params(seed, max_vertices))


def sample_star_convex_graph(seed: int, max_vertices: int = 8, min_leaves: int = 2) -> WeightedGraph:
    for sub in _subseeds(seed):
        g = random_graph(_leafy_params(sub, max_vertices))
        if len(leaves(g)) >= min_leaves and is_star_convex(g):
            return g
    raise AssertionError("unreachable")  # pragma: no cover


def sample_star_convex_tree(seed: int, max_vertices: int = 10) -> WeightedGraph:
    for sub in _subseeds(seed):
        g = random_graph(GeneratorParams((2, max_vertices), WEIGHTS_0_3, Fraction(0), sub))
        if is_star_convex(g):
            return g
    raise AssertionError("unreachable")  # pragma: no cover


def sample_overlapping_pair(seed: int, max_vertices: int = 8) -> tuple[WeightedGraph, WeightedGraph]:
    """Two star-convex graphs over one weight table whose cores meet.

    The union is also guaranteed to have a leaf.
    """
    for sub in _subseeds(seed):
        rng = random.Random(sub)
        ids = vertex_ids(rng.randint(3, max_vertices))
        weights = {v: rng.choice(WEIGHTS_0_3) for v in ids}
        shared = rng.choice(ids)
        parts = []
        for _ in range(2):
            others = [v for v in ids if v != shared]
            chosen = [shared] + rng.sample(others, rng.randint(1, len(others)))
            parts.append(random_connected_graph(rng, {v: weights[v] for v in chosen}, Fraction(1, 5)))
        g1, g2 = parts
        if not (leaves(g1) and leaves(g2) and leaves(graph_union(g1, g2))):
            continue
        c1, c2 = core(g1).core, core(g2).core
        if c1 & c2:
            return g1, g2
    raise AssertionError("unreachable")  # pragma: no cover


def sample_nested_pair(seed: int, max_vertices: int = 8) -> tuple[WeightedGraph, WeightedGraph]:
    """A star-convex graph and a star-convex connected subgraph of it."""
    for sub in _subseeds(seed):
        rng = random.Random(sub)
        big = sample_star_convex_graph(rng.getrandbits(64), max_vertices, min_leaves=1)
        # grow a random connected vertex subset, then drop some non-bridge edges
        start = rng.choice(big.vertices)
        keep = {start}
        target = rng.randint(2, len(big))
        while len(keep) < target:
            frontier = sorted({n for v in keep for n in big.neighbors(v)} - keep)
            keep.add(rng.choice(frontier))
        small = induced_subgraph(big, keep)
        for e in list(small.edges):
            if rng.random() < 0.3:
                trial = WeightedGraph(small.weights, [x for x in small.edges if x != e])
                if is_connected(trial):
                    small = trial
        if leaves(small) and is_star_convex(small):
            return small, big
    raise AssertionError("unreachable")  # pragma: no cover


def sample_class(seed: int, max_n: int = 5, max_half_length: int = 6) -> ConvexSequenceClass:
    rng = random.Random(seed)
    return random_convex_class(
        rng.randint(1, max_n), rng.randint(1, max_half_length), rng.getrandbits(64)
    )


def break_class(c: ConvexSequenceClass, seed: int) -> tuple[ConvexSequenceClass, str]:
    """Corrupt a valid class so that a chosen condition fails.

    Returns the broken class and the violation kind that must appear in its
    report (others may appear too).
    """
    rng = random.Random(seed)
    seqs = [list(s) for s in c.sequences]
    j = rng.randrange(len(seqs))
    half = c.half_length
    kind = rng.choice(["middle", "minimum", "convexity"])
    if kind == "middle":
        # lift the middle entry above the hub value; convexity may break too
        seqs[j][half] = c.hub_value + 1
    elif kind == "minimum":
        # every entry drops below the hub value; convexity is untouched
        seqs = [[x - 1 for x in s] for s in seqs]
        return ConvexSequenceClass(tuple(tuple(s) for s in seqs), c.hub_value), kind
    else:
        # a bump at an off-middle interior point, or at the middle if l == 1
        i = rng.choice([k for k in range(1, 2 * half) if k != half] or [half])
        seqs[j][i] = max(seqs[j][i - 1], seqs[j][i + 1]) + 1
    return ConvexSequenceClass(tuple(tuple(s) for s in seqs), c.hub_value), kind


# -- properties ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Finding:
    seed: int | None
    property: str
    verdict: str  # "pass", "fail" or "counterexample"
    params: dict[str, Any]
    witness: Any = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "property": self.property,
            "verdict": self.verdict,
            "params": self.params,
            "witness": self.witness,
        }


def compare_cores(g: WeightedGraph) -> tuple[frozenset[str] | None, frozenset[str] | None, bool]:
    """Fast and brute-force core of ``g``; both ``None`` when ``g`` has no leaves."""
    outcomes = []
    for compute in (lambda: core(g).core, lambda: brute_core(g)):
        try:
            outcomes.append(compute())
        except StarConvexError as exc:
            outcomes.append(type(exc).__name__)
    fast, brute = outcomes
    agree = fast == brute
    return (
        fast if isinstance(fast, frozenset) else None,
        brute if isinstance(brute, frozenset) else None,
        agree,
    )


def _prop_core_oracle(seed: int) -> Finding:
    g = sample_graph(seed)
    fast, brute, agree = compare_cores(g)
    witness = None
    if not agree:
        witness = {
            "graph": graph_to_dict(g),
            "fast": sorted(fast) if fast is not None else None,
            "brute": sorted(brute) if brute is not None else None,
        }
    return Finding(seed, "core-oracle", "pass" if agree else "fail", {"max_vertices": 8}, witness)


def _prop_witness(seed: int) -> Finding:
    g = sample_star_convex_graph(seed)
    try:
        wt = extract_witness_tree(g, check_invariants=True)
        verdict = verify_witness(g, wt)
        ok = bool(verdict) and is_star_convex(g)
        reason = verdict.reason
    except (InvariantViolation, StarConvexError) as exc:
        ok, reason = False, str(exc)
    witness = None if ok else {"graph": graph_to_dict(g), "reason": reason}
    return Finding(seed, "witness-roundtrip", "pass" if ok else "fail", {"max_vertices": 8}, witness)


def _prop_union(seed: int) -> Finding:
    g1, g2 = sample_overlapping_pair(seed)
    try:
        ok = overlap_analysis(g1, g2).union_star_convex
        reason = None
    except InvariantViolation as exc:
        ok, reason = False, str(exc)
    witness = None if ok else {"g1": graph_to_dict(g1), "g2": graph_to_dict(g2), "reason": reason}
    return Finding(seed, "union-overlap", "pass" if ok else "fail", {"max_vertices": 8}, witness)


def _prop_alignment(seed: int) -> Finding:
    t = sample_star_convex_tree(seed)
    report = core(t)
    for u in sorted(report.core & report.leaves):
        try:
            check_leaf_core_alignment(t, u)
        except AlignmentViolation as exc:
            witness = {
                "graph": graph_to_dict(t),
                "vertex": exc.vertex,
                "up_leaf": exc.up_leaf,
                "down_leaf": exc.down_leaf,
            }
            return Finding(seed, "leaf-core-alignment", "counterexample", {"max_vertices": 10}, witness)
    return Finding(seed, "leaf-core-alignment", "pass", {"max_vertices": 10})


def _prop_extremal(seed: int) -> Finding:
    t = sample_star_convex_tree(seed)
    ext = extremal_locus_check(t)
    witness = None if ext.holds else {"graph": graph_to_dict(t), "report": ext.to_dict()}
    return Finding(seed, "extremal-locus", "pass" if ext.holds else "fail", {"max_vertices": 10}, witness)


def weight_conservation(c: ConvexSequenceClass, g: WeightedGraph, hub: str = "hub") -> bool:
    """Legs 2j-1, hub and 2j carry exactly the multiset of sequence j's entries."""
    half = c.half_length
    for j, seq in enumerate(c.sequences, 1):
        placed = [g.weight(hub)] + [
            g.weight(leg_vertex(leg, k)) for leg in (2 * j - 1, 2 * j) for k in range(1, half + 1)
        ]
        if Counter(placed) != Counter(seq):
            return False
    return True


def _prop_embedding(seed: int) -> Finding:
    c = sample_class(seed)
    problems = []
    try:
        emb = embed(c)
        if emb.spec.hub not in emb.report.core:
            problems.append("hub not in core")
        if emb.spec.legs != 2 * c.n or emb.spec.leg_length != c.half_length:
            problems.append("wrong spider shape")
        if not weight_conservation(c, emb.graph, emb.spec.hub):
            problems.append("weights not conserved")
    except (InvalidClassError, InvariantViolation) as exc:
        problems.append(str(exc))
    broken, kind = break_class(c, seed)
    if kind not in {v.kind for v in validate_class(broken).violations}:
        problems.append(f"corrupted class ({kind}) not rejected")
    witness = {"class": c.to_dict(), "problems": problems} if problems else None
    params = {"n": c.n, "half_length": c.half_length}
    return Finding(seed, "embedding", "fail" if problems else "pass", params, witness)


def _probe_finding(seed: int | None, g1: WeightedGraph, g2: WeightedGraph, params: dict) -> Finding:
    result = subgraph_core_probe(g1, g2)
    record = probe_record(g1, g2, result)
    witness = None
    if not result.holds:
        witness = {**record, "g1_graph": graph_to_dict(g1), "g2_graph": graph_to_dict(g2)}
    verdict = "pass" if result.holds else "counterexample"
    return Finding(seed, "subgraph-core", verdict, params, witness)


def _prop_subgraph_core(seed: int) -> Finding:
    g1, g2 = sample_nested_pair(seed)
    return _probe_finding(seed, g1, g2, {"max_vertices": 8})


def path_fixture() -> tuple[WeightedGraph, WeightedGraph]:
    """Path v1(1)-v2(3) inside path v1(1)-v2(3)-v3(2): v1 leaves the core."""
    g1 = WeightedGraph({"v1": 1, "v2": 3}, [("v1", "v2")])
    g2 = WeightedGraph({"v1": 1, "v2": 3, "v3": 2}, [("v1", "v2"), ("v2", "v3")])
    return g1, g2


PROPERTIES: dict[str, Callable[[int], Finding]] = {
    "core-oracle": _prop_core_oracle,
    "witness-roundtrip": _prop_witness,
    "union-overlap": _prop_union,
    "leaf-core-alignment": _prop_alignment,
    "extremal-locus": _prop_extremal,
    "embedding": _prop_embedding,
    "subgraph-core": _prop_subgraph_core,
}


def run_campaign(props: Iterable[str], seeds: Iterable[int]) -> list[Finding]:
    """Run each property for each seed; the subgraph probe also runs its fixture first."""
    props = list(props)
    unknown = [p for p in props if p not in PROPERTIES]
    if unknown:
        raise ValueError(f"unknown properties: {', '.join(unknown)}")
    seeds = list(seeds)
    findings = []
    for name in props:
        if name == "subgraph-core":
            findings.append(_probe_finding(None, *path_fixture(), {"fixture": "path3"}))
        findings.extend(PROPERTIES[name](s) for s in seeds)
    return findings


def dump_findings(findings: Iterable[Finding]) -> str:
    return "".join(json.dumps(f.to_dict(), sort_keys=True) + "\n" for f in findings)
