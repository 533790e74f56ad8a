"""Check order bounds on minimal obstructions within search caps."""
from splitpolar import FamilySpec, verify_order_bound
from splitpolar.search import check_shape_conjecture

v = verify_order_bound(FamilySpec("pseudo-split", (0, 4), (0, 4)), (3, 3), 9)
print(f"pseudo-split (3,3) <= 9: {v.holds}; order-9 witnesses: {[r.graph6 for r in v.extremal]}")

v = verify_order_bound(FamilySpec("2K2-split", (0, 4), (0, 5)), (2, 2), 8)
print(f"2K2-split (2,2) <= 8: {v.holds}; largest found: {v.report.max_order_found}")

cv = check_shape_conjecture(3)
print(f"2K2-split (inf,3): {len(cv.report.records)} obstructions, conjectured shape holds: {cv.holds}")
print(f"tight construction of order {cv.tight_order} is minimal: {cv.tight_family_minimal}")
for r in cv.report.records:
    print("  ", r.line(), f"c={r.c} i={r.i}")
