"""Convex sequences with a shared minimum, laid out on a spider.

Sequence j runs leaf to leaf along legs 2j-1 and 2j through the hub. Each
sequence falls to the hub value and rises again, so every hub-to-leaf path is
monotone.

Run: python3 notebooks/03_spiders.py
"""

from __future__ import annotations

from starconvex import ConvexSequenceClass, embed, validate_class
from starconvex.oracle import random_convex_class
from starconvex.sequences import differences, leg_vertex

c = ConvexSequenceClass.of([(5, 2, 0, 1, 4), (3, 1, 0, 0, 2)], 0)
emb = embed(c)
g = emb.graph
for j in range(1, emb.spec.legs + 1):
    weights = [str(g.weight(leg_vertex(j, k))) for k in range(1, emb.spec.leg_length + 1)]
    print(f"leg {j} (hub outward): {', '.join(weights)}")
print("hub in core:", emb.spec.hub in emb.report.core)

for seq in c.sequences:
    print("differences", [str(d) for d in differences(seq)])

# Bumping the middle of the second sequence breaks the shared minimum.
broken = ConvexSequenceClass.of([(2, 0, 1), (3, 1, 2)], 0)
for v in validate_class(broken).violations:
    print(f"violation: {v.kind} at sequence {v.sequence}, index {v.index}: {v.detail}")

r = random_convex_class(n=3, half_length=4, seed=7)
e = embed(r)
print(f"random class: {r.n} sequences, spider with {e.spec.legs} legs, {len(e.graph)} vertices")
