"""Computing Tutte polynomials two ways and reading off counting facts.

Run:  python3 demos/tutte_polynomials.py
"""

from orienteq import (
    Multigraph,
    spanning_forests,
    activities,
    tutte_activity_expansion,
    tutte_deletion_contraction,
)

# the triangle: three vertices, edges e1=(0,1), e2=(1,2), e3=(2,0);
# the file/constructor order of the edges is also the activity order
triangle = Multigraph(3, ((0, 1), (1, 2), (2, 0)))
view = triangle.full_view()

print("== spanning trees of the triangle and their activities ==")
for tree in spanning_forests(view):
    internal, external = activities(view, tree)
    print(f"  tree {tree}: internal={internal}, external={external}")

print()
print("== the Tutte polynomial, by two independent methods ==")
by_recursion = tutte_deletion_contraction(view)
by_activities = tutte_activity_expansion(view)
print(f"  deletion-contraction: {by_recursion}")
print(f"  activity expansion:   {by_activities}")
assert by_recursion == by_activities

print()
print("== what the evaluations count ==")
print(f"  T(1,1) = {by_recursion.evaluate(1, 1)}  spanning trees")
print(f"  T(2,0) = {by_recursion.evaluate(2, 0)}  acyclic orientations")
print(f"  T(0,2) = {by_recursion.evaluate(0, 2)}  totally cyclic orientations")
print(f"  T(0,1) = {by_recursion.evaluate(0, 1)}  Eulerian classes of totally cyclic orientations")

print()
print("== K4, with its richer coefficient table ==")
k4 = Multigraph(4, tuple((u, v) for u in range(4) for v in range(u + 1, 4)))
poly = tutte_deletion_contraction(k4.full_view())
print(f"  T(K4) = {poly}")
print(f"  16 spanning trees: T(1,1) = {poly.evaluate(1, 1)}")
