"""Brute force against the fast core, then a seeded property campaign.

The oracle enumerates every simple path, so it only scales to small graphs. It
shares no code with the reachability sweeps it checks.

Run: python3 notebooks/04_oracle_and_fuzz.py
"""

from __future__ import annotations

import json
import time
from collections import Counter

from starconvex import core
from starconvex.fuzz import PROPERTIES, compare_cores, run_campaign
from starconvex.graph import graph_to_dict, leaves
from starconvex.oracle import GeneratorParams, exhaustive_connected_graphs, random_graph

start = time.perf_counter()
total = sum(compare_cores(g)[2] for g in exhaustive_connected_graphs(5))
print(f"graphs on <=5 vertices, weights 1/2: {total} agree ({time.perf_counter() - start:.2f}s)")

g = random_graph(GeneratorParams(seed=42))
print("seed 42 graph:", json.dumps(graph_to_dict(g)))
print("core:", sorted(core(g).core) if leaves(g) else "no leaves")

findings = run_campaign(PROPERTIES, range(200))
tally = Counter((f.property, f.verdict) for f in findings)
for (prop, verdict), count in sorted(tally.items()):
    print(f"{prop:22} {verdict:15} {count}")

# Smallest alignment counterexample found: a leaf core vertex on a plateau.
bad = [f for f in findings if f.property == "leaf-core-alignment" and f.verdict != "pass"]
smallest = min(bad, key=lambda f: len(f.witness["graph"]["vertices"]))
print("smallest alignment counterexample:", smallest.witness)
