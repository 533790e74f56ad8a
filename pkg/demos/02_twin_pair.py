"""Degree sequences do not decide polarity of 2K2-split graphs.

The two graphs below share a degree sequence. Only the left one has two
I-vertices missing the same C-vertex, and that is what (5,4)-polarity needs.
"""
from splitpolar import is_isomorphic, oracle_is_polar, twok2_catalog, twok2_decide, twok2_witness
from splitpolar.graph import degree_sequence
from splitpolar.twok2 import twok2_analysis

left, right = twok2_catalog("twin_left"), twok2_catalog("twin_right")
print("degrees:", degree_sequence(left).degrees)
print("same degrees:", degree_sequence(left).degrees == degree_sequence(right).degrees)
print("isomorphic:", is_isomorphic(left, right))

for name, g in (("left", left), ("right", right)):
    a = twok2_analysis(g)
    v, group = a.best_I_star_v()
    print(f"{name}: decider {twok2_decide(g, (5, 4))}, oracle {oracle_is_polar(g, (5, 4))}, "
          f"largest I-group missing one C-vertex: {sorted(group)} (misses {v})")

w = twok2_witness(left, (5, 4))
print("left witness A parts:", [sorted(p) for p in w.A_parts])
print("left witness B cliques:", [sorted(c) for c in w.B_cliques])
