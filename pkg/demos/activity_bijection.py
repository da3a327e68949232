"""The staged bijection: Eulerian classes of totally cyclic orientations
<-> spanning trees with zero internal activity.

Each stage normalizes the contracted partial orientation to its unique
reduced form, then deletes the largest oriented edge if it is a loop or
cycle flippable there, and unorients it otherwise.  The unoriented edges
that remain at the end are the spanning tree.

Run:  python3 demos/activity_bijection.py
"""

from orienteq import (
    Multigraph,
    NormalContext,
    Orientation,
    classes,
    forward,
    inverse,
)

triangle = Multigraph(3, ((0, 1), (1, 2), (2, 0)))
context = NormalContext.with_default_normal(triangle)  # normal orientation "+++"
view = triangle.full_view()

print("== forward run on the directed 3-cycle, with its stage trace ==")
log = []
tree = forward(context, Orientation.from_string(view, "+++"), log=log)
for event in log:
    print(f"  {event}")
print(f"  resulting spanning tree: edges {tree}")

print()
print("== the whole Eulerian class lands on the same tree ==")
for eps in classes(view, "eulerian", "totally_cyclic").blocks[0]:
    print(f"  forward({eps}) = {forward(context, eps)}")

print()
print("== and the inverse walks back to the reduced representative ==")
print(f"  inverse({tree}) = {inverse(context, tree)}")

print()
print("== a digon, with a mixed normal orientation ==")
digon = Multigraph(2, ((0, 1), (0, 1)))
ctx = NormalContext(digon, (True, False))  # normal "+-"
dview = digon.full_view()
t = forward(ctx, Orientation.from_string(dview, "+-"))
print(f"  forward(+-) = {t}")
print(f"  inverse({t}) = {inverse(ctx, t)}")
