"""Search small H-split families for minimal polar obstructions."""
import math
import time

from splitpolar import UNIPOLAR, FamilySpec, find_minimal_obstructions

runs = [
    ("pseudo-split", (1, 2)),
    ("pseudo-split", (2, math.inf)),
    ("pseudo-split", UNIPOLAR),
    ("pseudo-split", (2, 2)),
    ("2K2-split", (1, math.inf)),
    ("2K2-split", (1, 3)),
    ("C4-split", (1, math.inf)),
]

for cls, p in runs:
    t = time.perf_counter()
    report = find_minimal_obstructions(FamilySpec(cls, (0, 3), (0, 3)), p)
    found = ", ".join(f"{r.graph6} (n={r.order}, c={r.c}, i={r.i})" for r in report.records)
    print(f"{cls} {report.params}: {found}  [{time.perf_counter() - t:.2f}s]")
