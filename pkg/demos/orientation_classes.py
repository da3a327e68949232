"""Orientations of a multigraph and their equivalence classes.

Two orientations are Eulerian equivalent when their disagreement set is
balanced at every vertex, cut equivalent when it is a disjoint union of
uniformly directed bonds, and Eulerian-cut equivalent when it splits into
one part of each kind.  Every class count is a Tutte evaluation.

Run:  python3 demos/orientation_classes.py
"""

from orienteq import (
    Multigraph,
    classes,
    enumerate_orientations,
    eulerian_equivalent,
    is_acyclic,
    is_totally_cyclic,
    tutte_deletion_contraction,
    verify_identities,
)

triangle = Multigraph(3, ((0, 1), (1, 2), (2, 0)))
view = triangle.full_view()

print("== the eight orientations of the triangle ==")
for eps in enumerate_orientations(view):
    tags = []
    if is_acyclic(view, eps):
        tags.append("acyclic")
    if is_totally_cyclic(view, eps):
        tags.append("totally cyclic")
    print(f"  {eps}  {' '.join(tags)}")

print()
print("== the two cyclic orientations form one Eulerian class ==")
part = classes(view, "eulerian", "totally_cyclic")
print(f"  blocks: {part.block_strings()}")

print()
print("== every class count is a Tutte evaluation ==")
poly = tutte_deletion_contraction(view)
for relation, restriction, point in (
    ("eulerian", "totally_cyclic", (0, 1)),
    ("cut", "acyclic", (1, 0)),
    ("eulerian", "all", (2, 1)),
    ("cut", "all", (1, 2)),
    ("eulerian_cut", "all", (1, 1)),
):
    count = classes(view, relation, restriction).count
    x, y = point
    print(f"  #{relation} classes of {restriction}: {count} == T{point} = {poly.evaluate(x, y)}")

print()
print("== the full identity report for K4 ==")
k4 = Multigraph(4, tuple((u, v) for u in range(4) for v in range(u + 1, 4)))
report = verify_identities(k4.full_view())
for name, entry in report.items():
    if not name.startswith("_"):
        print(f"  {entry['status']:5}  {name}  (value {entry.get('actual')})")
