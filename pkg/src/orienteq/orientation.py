"""Orientations of graph views: reachability, totally cyclic / acyclic
predicates, flippability, directed Eulerian subgraphs and directed cuts.

A '+' bit means the edge is traversed tail -> head as stored in the base
graph; '-' means the reverse.  Bits exist only for present edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InvalidEdgeError, InvalidInputError, ResourceCapError
from .multigraph import GraphView, connected_components

ORIENTATION_CAP = 20
ORACLE_EDGE_CAP = 12

PLUS = "+"
MINUS = "-"
_MINUS_ALIASES = {"-", "−", "–"}  # ASCII hyphen, minus sign, en dash


@dataclass(frozen=True)
class Orientation:
    """One direction bit per present edge of a view."""

    view: GraphView
    bits: tuple[tuple[int, bool], ...]  # (edge id, bit) sorted by edge id

    @staticmethod
    def make(view: GraphView, bit_map) -> Orientation:
        present = view.present_edges()
        if sorted(bit_map) != present:
            raise InvalidInputError("orientation bits must cover exactly the present edges")
        return Orientation(view, tuple((e, bool(bit_map[e])) for e in present))

    @staticmethod
    def from_string(view: GraphView, s: str) -> Orientation:
        present = view.present_edges()
        if len(s) != len(present):
            raise InvalidInputError(
                f"orientation string length {len(s)} != {len(present)} present edges"
            )
        bit_map = {}
        for e, ch in zip(present, s):
            if ch == PLUS:
                bit_map[e] = True
            elif ch in _MINUS_ALIASES:
                bit_map[e] = False
            else:
                raise InvalidInputError(f"bad orientation character {ch!r}")
        return Orientation.make(view, bit_map)

    def bit_map(self) -> dict[int, bool]:
        return dict(self.bits)

    def bit(self, e: int) -> bool:
        for ei, b in self.bits:
            if ei == e:
                return b
        raise InvalidEdgeError(f"edge {e} has no orientation bit")

    def arc(self, e: int) -> tuple[int, int]:
        """(from-class, to-class) of a present edge under this orientation."""
        a, b = self.view.ends(e)
        return (a, b) if self.bit(e) else (b, a)

    def arcs(self) -> list[tuple[int, int, int]]:
        """All (from-class, to-class, edge id) triples."""
        out = []
        for e, b in self.bits:
            a, c = self.view.ends(e)
            out.append((a, c, e) if b else ((c, a, e)))
        return out

    def as_string(self) -> str:
        return "".join(PLUS if b else MINUS for _, b in self.bits)

    def __str__(self):
        return self.as_string()


def enumerate_orientations(view: GraphView, cap: int = ORIENTATION_CAP):
    """All 2^m orientations, in lexicographic order of their +/- strings."""
    present = view.present_edges()
    if len(present) > cap:
        raise ResourceCapError(f"{len(present)} present edges exceed orientation cap {cap}")
    m = len(present)
    for mask in range(2**m):
        # bit i of the string: '+' (True) when the mask bit is 0, so counting
        # up in mask walks the strings in lexicographic order ('+' < '-')
        bit_map = {e: not (mask >> (m - 1 - i)) & 1 for i, e in enumerate(present)}
        yield Orientation.make(view, bit_map)


def reverse_edges(eps: Orientation, edge_subset) -> Orientation:
    edge_subset = set(edge_subset)
    bm = eps.bit_map()
    for e in edge_subset:
        if e not in bm:
            raise InvalidEdgeError(f"edge {e} is not present")
        bm[e] = not bm[e]
    return Orientation.make(eps.view, bm)


def _adjacency(eps: Orientation, excluded=None, max_edge=None):
    adj: dict[int, list[tuple[int, int]]] = {}
    for a, b, e in eps.arcs():
        if e == excluded or (max_edge is not None and e > max_edge):
            continue
        adj.setdefault(a, []).append((b, e))
    return adj


def reachable(view: GraphView, eps: Orientation, u: int, v: int, excluded=None) -> bool:
    """Directed path u -> v over present edges (optionally minus one edge)."""
    u, v = view.cls(u), view.cls(v)
    if u == v:
        return True
    adj = _adjacency(eps, excluded=excluded)
    seen = {u}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for x, _ in adj.get(w, ()):
            if x == v:
                return True
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return False


def _strongly_connected(classes, arcs) -> bool:
    if len(classes) <= 1:
        return True
    fwd: dict[int, list[int]] = {}
    back: dict[int, list[int]] = {}
    for a, b, _ in arcs:
        fwd.setdefault(a, []).append(b)
        back.setdefault(b, []).append(a)
    root = min(classes)

    def sweep(adj):
        seen = {root}
        queue = deque([root])
        while queue:
            w = queue.popleft()
            for x in adj.get(w, ()):
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
        return seen

    classes = set(classes)
    return sweep(fwd) >= classes and sweep(back) >= classes


def is_totally_cyclic(view: GraphView, eps: Orientation) -> bool:
    """No directed cut: every component strongly connected (loops ignored)."""
    arcs = [(a, b, e) for a, b, e in eps.arcs() if a != b]
    for comp in connected_components(view):
        comp_arcs = [t for t in arcs if t[0] in comp]
        if not _strongly_connected(comp, comp_arcs):
            return False
    return True


def edge_on_directed_cycle(view: GraphView, eps: Orientation, e: int) -> bool:
    """Oracle building block: e lies on a directed cycle."""
    if view.is_view_loop(e):
        return True
    a, b = eps.arc(e)
    return reachable(view, eps, b, a, excluded=e)


def is_acyclic(view: GraphView, eps: Orientation) -> bool:
    """No directed cycle (a loop immediately fails)."""
    indeg: dict[int, int] = {c: 0 for c in view.classes()}
    out: dict[int, list[int]] = {}
    for a, b, _ in eps.arcs():
        if a == b:
            return False
        indeg[b] += 1
        out.setdefault(a, []).append(b)
    queue = deque(c for c, d in indeg.items() if d == 0)
    seen = 0
    while queue:
        w = queue.popleft()
        seen += 1
        for x in out.get(w, ()):
            indeg[x] -= 1
            if indeg[x] == 0:
                queue.append(x)
    return seen == len(indeg)


def is_cycle_flippable(view: GraphView, eps: Orientation, e: int) -> bool:
    """Directed paths both ways between the endpoints in G - e.
    Loops are cycle flippable by convention."""
    view._require_present(e)
    if view.is_view_loop(e):
        return True
    u, v = eps.arc(e)
    return reachable(view, eps, u, v, excluded=e) and reachable(view, eps, v, u, excluded=e)


def is_cut_flippable(view: GraphView, eps: Orientation, e: int) -> bool:
    """No directed path either way between the endpoints in G - e."""
    view._require_present(e)
    if view.is_view_loop(e):
        raise InvalidInputError("a loop is never cut flippable")
    u, v = eps.arc(e)
    return not reachable(view, eps, u, v, excluded=e) and not reachable(
        view, eps, v, u, excluded=e
    )


def is_directed_eulerian(view: GraphView, eps: Orientation, edge_subset) -> bool:
    """In-degree equals out-degree at every vertex of the sub-digraph.
    A loop contributes one to both sides."""
    balance: dict[int, int] = {}
    for e in set(edge_subset):
        view._require_present(e)
        a, b = eps.arc(e)
        balance[a] = balance.get(a, 0) - 1
        balance[b] = balance.get(b, 0) + 1
    return all(x == 0 for x in balance.values())


def is_directed_cut(view: GraphView, eps: Orientation, edge_subset) -> bool:
    """Disjoint union of directed bonds, tested by the height-function
    characterization: an integer height with step 1 across every edge of
    the subset (in its direction) and step 0 across every other present
    edge.  Any loop in the subset disqualifies it.
    """
    D = set(edge_subset)
    for e in D:
        view._require_present(e)
        if view.is_view_loop(e):
            return False
    constraints: dict[int, list[tuple[int, int]]] = {}
    for a, b, e in eps.arcs():
        if a == b:
            continue
        step = 1 if e in D else 0
        constraints.setdefault(a, []).append((b, step))
        constraints.setdefault(b, []).append((a, -step))
    height: dict[int, int] = {}
    for c in view.classes():
        if c in height:
            continue
        height[c] = 0
        queue = deque([c])
        while queue:
            w = queue.popleft()
            for x, step in constraints.get(w, ()):
                h = height[w] + step
                if x not in height:
                    height[x] = h
                    queue.append(x)
                elif height[x] != h:
                    return False
    return True


def directed_cut_oracle(view: GraphView, eps: Orientation, edge_subset) -> bool:
    """Definitional recursion: peel off directed full cuts until empty."""
    present = view.present_edges()
    if len(present) > ORACLE_EDGE_CAP:
        raise ResourceCapError(
            f"{len(present)} present edges exceed oracle cap {ORACLE_EDGE_CAP}"
        )
    D = frozenset(edge_subset)
    for e in D:
        view._require_present(e)
    classes = view.classes()
    ends = {e: view.ends(e) for e in present}
    arcs = {e: eps.arc(e) for e in present}

    def peel(remaining: frozenset) -> bool:
        if not remaining:
            return True
        n = len(classes)
        for mask in range(1, 2 ** (n - 1)):
            side = {classes[i] for i in range(n) if (mask >> i) & 1}
            boundary = [e for e in present if (ends[e][0] in side) != (ends[e][1] in side)]
            if not boundary or not set(boundary) <= remaining:
                continue
            directions = {arcs[e][0] in side for e in boundary}
            if len(directions) == 1 and peel(remaining - set(boundary)):
                return True
        return False

    return peel(D)
