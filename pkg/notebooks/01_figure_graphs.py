"""Two five-vertex graphs that differ in one edge.

Both are star-convex with v3 in the core. Their common edges form a tree whose
core is empty, while their union stays star-convex.

Run: python3 notebooks/01_figure_graphs.py
"""

from __future__ import annotations

from starconvex import core, export_dot, graph_intersection, graph_union, overlap_analysis
from starconvex.fixtures import figure_1, figure_2
from starconvex.paths import Direction, monotone_path


def show(name: str, g) -> None:
    report = core(g)
    print(f"{name}: leaves={sorted(report.leaves)} core={sorted(report.core)}")


g1, g2 = figure_1(), figure_2()
show("figure 1", g1)
show("figure 2", g2)

# v3 reaches the leaf v1 downhill and the leaf v5 on a plateau.
for leaf in ("v1", "v5"):
    for d in Direction:
        p = monotone_path(g2, "v3", leaf, d)
        if p is not None:
            print(f"  v3 -> {leaf} {d.value}: {' '.join(p.vertices)}")

inter = graph_intersection(g1, g2)
show("intersection", inter)
# The only route from v3 to v4 climbs down to v2 and back up.
print("  v3 -> v4 UP:", monotone_path(inter, "v3", "v4", Direction.UP))
print("  v3 -> v4 DOWN:", monotone_path(inter, "v3", "v4", Direction.DOWN))

show("union", graph_union(g1, g2))
print("findings:", overlap_analysis(g1, g2).findings)

print()
print(export_dot(g2, core(g2)))
