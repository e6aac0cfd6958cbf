"""Certifying star-convexity with a subtree.

A witness tree keeps every leaf of the graph and is itself star-convex. Here we
extract one from a triangle with two pendants, try every core vertex as the
root, and show a candidate that verification rejects.

Run: python3 notebooks/02_witness_trees.py
"""

from __future__ import annotations

from starconvex import WeightedGraph, core, extract_witness_tree, verify_witness
from starconvex.fixtures import pendant_triangle

g = pendant_triangle()
print("graph core:", sorted(core(g).core))

for root in sorted(core(g).core):
    wt = extract_witness_tree(g, root, check_invariants=True)
    verdict = verify_witness(g, wt)
    print(f"root {root}: edges={list(wt.tree.edges)} kept root={wt.root} valid={verdict.ok}")

# Witnesses are not unique: the long way round the triangle climbs 0,1,2,3,4.
other = WeightedGraph(g.weights, [("p", "a"), ("a", "b"), ("b", "c"), ("c", "q")])
print("a-b-c route:", verify_witness(g, other))

# An edge the graph does not have.
shortcut = WeightedGraph({"p": 0, "a": 1, "q": 4}, [("p", "a"), ("a", "q")])
print("edge a-q:", verify_witness(g, shortcut))

# A tree with the right leaves whose own core is empty.
spine = WeightedGraph({"x": 2, "y": 1, "z": 2, "l1": 3, "l2": 0}, [("l1", "x"), ("x", "y"), ("y", "z"), ("z", "l2")])
print("valley tree:", verify_witness(spine, spine))
