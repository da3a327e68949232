"""Cut / Eulerian / Eulerian-cut equivalence of orientations, class
enumeration, and the Tutte-evaluation identity checks.

Two enumerators are provided: ``classes`` takes the transitive closure of
the pairwise predicate, ``classes_by_flips`` closes under reversal moves
(directed cycles for the Eulerian relation, directed cuts for the cut
relation, both for Eulerian-cut).  They must agree; the identity checker
uses the flip closure, which is much cheaper.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InvalidInputError, ResourceCapError
from .multigraph import GraphView, connected_components
from .orientation import (
    ORIENTATION_CAP,
    Orientation,
    enumerate_orientations,
    is_acyclic,
    is_directed_cut,
    is_directed_eulerian,
    is_totally_cyclic,
    reverse_edges,
)

RELATIONS = ("eulerian", "cut", "eulerian_cut")
RESTRICTIONS = ("all", "totally_cyclic", "acyclic")

EC_SPLIT_CAP = 20


def difference_set(eps1: Orientation, eps2: Orientation) -> frozenset[int]:
    if eps1.view != eps2.view:
        raise InvalidInputError("orientations belong to different views")
    b2 = eps2.bit_map()
    return frozenset(e for e, b in eps1.bits if b != b2[e])


def eulerian_equivalent(eps1: Orientation, eps2: Orientation) -> bool:
    return is_directed_eulerian(eps1.view, eps1, difference_set(eps1, eps2))


def cut_equivalent(eps1: Orientation, eps2: Orientation) -> bool:
    return is_directed_cut(eps1.view, eps1, difference_set(eps1, eps2))


def eulerian_cut_equivalent(
    eps1: Orientation, eps2: Orientation, cap: int = EC_SPLIT_CAP
) -> bool:
    """Some split of the difference set into an Eulerian part and a
    directed-cut part; brute force over all splits."""
    diff = sorted(difference_set(eps1, eps2))
    if len(diff) > cap:
        raise ResourceCapError(f"difference set of {len(diff)} edges exceeds cap {cap}")
    view = eps1.view
    n = len(diff)
    for mask in range(2**n):
        part_a = [diff[i] for i in range(n) if (mask >> i) & 1]
        part_b = [diff[i] for i in range(n) if not (mask >> i) & 1]
        if is_directed_eulerian(view, eps1, part_a) and is_directed_cut(view, eps1, part_b):
            return True
    return False


_PREDICATES = {
    "eulerian": eulerian_equivalent,
    "cut": cut_equivalent,
    "eulerian_cut": eulerian_cut_equivalent,
}


def restricted_orientations(
    view: GraphView, restriction: str, cap: int = ORIENTATION_CAP
) -> list[Orientation]:
    if restriction not in RESTRICTIONS:
        raise InvalidInputError(f"unknown restriction {restriction!r}")
    out = []
    for eps in enumerate_orientations(view, cap=cap):
        if restriction == "totally_cyclic" and not is_totally_cyclic(view, eps):
            continue
        if restriction == "acyclic" and not is_acyclic(view, eps):
            continue
        out.append(eps)
    return out


@dataclass(frozen=True)
class ClassPartition:
    relation: str
    restriction: str
    blocks: tuple[tuple[Orientation, ...], ...]  # each sorted; blocks by minimum

    @property
    def count(self) -> int:
        return len(self.blocks)

    @property
    def representatives(self) -> tuple[Orientation, ...]:
        return tuple(block[0] for block in self.blocks)

    def block_strings(self) -> list[list[str]]:
        return [[eps.as_string() for eps in block] for block in self.blocks]


def _partition_from_groups(relation, restriction, groups) -> ClassPartition:
    blocks = [tuple(sorted(g, key=lambda o: o.as_string())) for g in groups]
    blocks.sort(key=lambda b: b[0].as_string())
    return ClassPartition(relation, restriction, tuple(blocks))


def classes(
    view: GraphView, relation: str, restriction: str, cap: int = ORIENTATION_CAP
) -> ClassPartition:
    """Transitive closure of the pairwise predicate over the restricted set."""
    if relation not in RELATIONS:
        raise InvalidInputError(f"unknown relation {relation!r}")
    pred = _PREDICATES[relation]
    pool = restricted_orientations(view, restriction, cap=cap)
    parent = list(range(len(pool)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(pool)):
        for j in range(i + 1, len(pool)):
            if find(i) != find(j) and pred(pool[i], pool[j]):
                parent[find(j)] = find(i)
    groups: dict[int, list[Orientation]] = {}
    for i, eps in enumerate(pool):
        groups.setdefault(find(i), []).append(eps)
    return _partition_from_groups(relation, restriction, groups.values())


def directed_cycles(view: GraphView, eps: Orientation) -> list[frozenset[int]]:
    """Edge sets of all simple directed cycles (loops included)."""
    cycles = set()
    arcs_from: dict[int, list[tuple[int, int]]] = {}
    for a, b, e in eps.arcs():
        if a == b:
            cycles.add(frozenset([e]))
        else:
            arcs_from.setdefault(a, []).append((b, e))

    def extend(start, current, path_vertices, path_edges):
        for nxt, e in arcs_from.get(current, ()):
            if nxt == start:
                cycles.add(frozenset(path_edges + [e]))
            elif nxt not in path_vertices and nxt > start:
                extend(start, nxt, path_vertices | {nxt}, path_edges + [e])

    for start in view.classes():
        extend(start, start, {start}, [])
    return sorted(cycles, key=sorted)


def directed_cut_moves(view: GraphView, eps: Orientation) -> list[frozenset[int]]:
    """Uniformly directed full bipartition boundaries, per component."""
    moves = set()
    ends = {e: view.ends(e) for e in view.present_edges()}
    arc = {e: eps.arc(e) for e in view.present_edges()}
    for comp in connected_components(view):
        comp = sorted(comp)
        n = len(comp)
        for mask in range(1, 2 ** (n - 1)):
            side = {comp[i] for i in range(n) if (mask >> i) & 1}
            boundary = [
                e for e, (a, b) in ends.items() if a != b and (a in side) != (b in side)
            ]
            if not boundary:
                continue
            directions = {arc[e][0] in side for e in boundary}
            if len(directions) == 1:
                moves.add(frozenset(boundary))
    return sorted(moves, key=sorted)


def _moves(view, eps, relation):
    if relation == "eulerian":
        return directed_cycles(view, eps)
    if relation == "cut":
        return directed_cut_moves(view, eps)
    return directed_cycles(view, eps) + directed_cut_moves(view, eps)


def classes_by_flips(
    view: GraphView, relation: str, restriction: str, cap: int = ORIENTATION_CAP
) -> ClassPartition:
    """Closure under reversal moves, restricted to the same orientation set."""
    if relation not in RELATIONS:
        raise InvalidInputError(f"unknown relation {relation!r}")
    pool = restricted_orientations(view, restriction, cap=cap)
    allowed = {eps.as_string(): eps for eps in pool}
    unvisited = dict(allowed)
    groups = []
    while unvisited:
        seed = unvisited.pop(min(unvisited))
        block = [seed]
        queue = deque([seed])
        while queue:
            eps = queue.popleft()
            for move in _moves(view, eps, relation):
                neighbor = reverse_edges(eps, move)
                key = neighbor.as_string()
                if key in unvisited:
                    block.append(unvisited.pop(key))
                    queue.append(neighbor)
        groups.append(block)
    return _partition_from_groups(relation, restriction, groups)


def class_count(view: GraphView, relation: str, restriction: str, cap: int = ORIENTATION_CAP) -> int:
    return classes_by_flips(view, relation, restriction, cap=cap).count


def alpha(view: GraphView, cap: int = ORIENTATION_CAP) -> int:
    """Number of Eulerian equivalence classes of totally cyclic orientations."""
    return class_count(view, "eulerian", "totally_cyclic", cap=cap)


def unique_source_count(view: GraphView, source: int, cap: int = ORIENTATION_CAP) -> int:
    """Acyclic orientations whose unique source is the given vertex class."""
    source = view.cls(source)
    total = 0
    for eps in restricted_orientations(view, "acyclic", cap=cap):
        indeg = {c: 0 for c in view.classes()}
        for _, b, _e in eps.arcs():
            indeg[b] += 1
        sources = [c for c, d in indeg.items() if d == 0]
        if sources == [source]:
            total += 1
    return total


def verify_identities(view: GraphView, cap: int = ORIENTATION_CAP, skip_above: int = 14) -> dict:
    """Check every Tutte-evaluation identity and the inductive properties
    of the class count alpha.  Identities that would need a full 2^m
    enumeration are marked skipped above the threshold."""
    from .tutte import tutte_deletion_contraction

    poly = tutte_deletion_contraction(view)
    m = len(view.present_edges())
    report: dict[str, dict] = {}

    def record(name, expected, actual):
        report[name] = {"expected": expected, "actual": actual, "status": "pass" if expected == actual else "fail"}

    if m > skip_above:
        for name in (
            "eulerian_classes_BO=T(0,1)",
            "cut_classes_AO=T(1,0)",
            "eulerian_classes_O=T(2,1)",
            "cut_classes_O=T(1,2)",
            "eulerian_cut_classes_O=T(1,1)",
            "acyclic_count=T(2,0)",
            "totally_cyclic_count=T(0,2)",
            "unique_source_counts=T(1,0)",
        ):
            report[name] = {"status": "skipped", "reason": f"m={m} exceeds {skip_above}"}
    else:
        record("eulerian_classes_BO=T(0,1)", poly.evaluate(0, 1), class_count(view, "eulerian", "totally_cyclic", cap))
        record("cut_classes_AO=T(1,0)", poly.evaluate(1, 0), class_count(view, "cut", "acyclic", cap))
        record("eulerian_classes_O=T(2,1)", poly.evaluate(2, 1), class_count(view, "eulerian", "all", cap))
        record("cut_classes_O=T(1,2)", poly.evaluate(1, 2), class_count(view, "cut", "all", cap))
        record("eulerian_cut_classes_O=T(1,1)", poly.evaluate(1, 1), class_count(view, "eulerian_cut", "all", cap))
        record("acyclic_count=T(2,0)", poly.evaluate(2, 0), len(restricted_orientations(view, "acyclic", cap)))
        record("totally_cyclic_count=T(0,2)", poly.evaluate(0, 2), len(restricted_orientations(view, "totally_cyclic", cap)))
        t10 = poly.evaluate(1, 0)
        record(
            "unique_source_counts=T(1,0)",
            [t10] * len(view.classes()),
            [unique_source_count(view, c, cap) for c in view.classes()],
        )

        # inductive properties of alpha
        a = class_count(view, "eulerian", "totally_cyclic", cap)
        if m == 0:
            record("alpha_empty=1", 1, a)
        loops = [e for e in view.present_edges() if view.is_view_loop(e)]
        if loops:
            record(
                "alpha_loop_invariant",
                [a] * len(loops),
                [class_count(view.delete(e), "eulerian", "totally_cyclic", cap) for e in loops],
            )
        bridges = [e for e in view.present_edges() if view.is_bridge(e)]
        if bridges:
            record("alpha_bridge=0", 0, a)
        ordinary = [
            e
            for e in view.present_edges()
            if not view.is_view_loop(e) and not view.is_bridge(e)
        ]
        if ordinary:
            e = ordinary[0]
            record(
                "alpha_deletion_contraction",
                a,
                class_count(view.delete(e), "eulerian", "totally_cyclic", cap)
                + class_count(view.contract(e), "eulerian", "totally_cyclic", cap),
            )

    report["_summary"] = {
        "failed": sum(1 for k, v in report.items() if not k.startswith("_") and v.get("status") == "fail"),
        "skipped": sum(1 for k, v in report.items() if not k.startswith("_") and v.get("status") == "skipped"),
    }
    return report
