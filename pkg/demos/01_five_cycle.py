"""Polar partitions of the 5-cycle and where it sits in the class ladder."""
from splitpolar import cycle_graph, decide_polarity, class_ladder
from splitpolar.coloring import ps_coloring_profile

c5 = cycle_graph(5)
print("classes:", {k: v is not None for k, v in class_ladder(c5).items()})

for s, k in [(1, 1), (1, 2), (2, 1), (2, 2)]:
    w, method = decide_polarity(c5, (s, k))
    if w is None:
        print(f"({s},{k}): not polar")
    else:
        print(f"({s},{k}): A parts {[sorted(p) for p in w.A_parts]}, B cliques {[sorted(c) for c in w.B_cliques]}")

print("coloring profile:", ps_coloring_profile(c5))
