"""Multigraphs with stable edge identities, minors, forests and activities.

Edges are identified by their 1-based position in the input sequence; that
position is also the edge's rank in the activity order and never changes,
no matter how many deletions or contractions a view has absorbed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

from .errors import InvalidEdgeError, InvalidInputError, ResourceCapError

PRESENT = "present"
DELETED = "deleted"
CONTRACTED = "contracted"

FOREST_CAP = 10**6


@dataclass(frozen=True)
class Multigraph:
    """A multigraph: vertex count plus an ordered edge list.

    Loops and parallel edges are allowed.  Vertices are 0-based; edge ids
    are 1-based and double as the activity order (e_i < e_j iff i < j).
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidInputError("vertex_count must be nonnegative")
        object.__setattr__(self, "edges", tuple(map(tuple, self.edges)))
        for tail, head in self.edges:
            if not (0 <= tail < self.vertex_count and 0 <= head < self.vertex_count):
                raise InvalidInputError(f"edge endpoint out of range: ({tail}, {head})")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> range:
        return range(1, len(self.edges) + 1)

    def endpoints(self, e: int) -> tuple[int, int]:
        if not 1 <= e <= len(self.edges):
            raise InvalidEdgeError(f"no edge {e}")
        return self.edges[e - 1]

    def full_view(self) -> GraphView:
        return GraphView(self, (PRESENT,) * len(self.edges))

    def reorder(self, order: tuple[int, ...]) -> Multigraph:
        """New graph whose activity order is ``order`` (a permutation of
        old 1-based edge ids, listed from smallest rank to largest)."""
        if sorted(order) != list(self.edge_ids):
            raise InvalidInputError(f"not a permutation of edge ids: {order}")
        return Multigraph(self.vertex_count, tuple(self.edges[e - 1] for e in order))

    def is_connected(self) -> bool:
        comps = connected_components(self.full_view())
        return len(comps) <= 1


@dataclass(frozen=True)
class GraphView:
    """A minor of a base graph: per-edge status plus the vertex partition
    generated by the contracted edges.  Immutable; minors are new views."""

    base: Multigraph
    status: tuple[str, ...]
    # vertex -> class representative (min vertex of its class); derived.
    cls_of: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if len(self.status) != self.base.edge_count:
            raise InvalidInputError("status length mismatch")
        parent = list(range(self.base.vertex_count))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e, st in enumerate(self.status, start=1):
            if st == CONTRACTED:
                tail, head = self.base.endpoints(e)
                ra, rb = find(tail), find(head)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        object.__setattr__(self, "cls_of", tuple(find(v) for v in range(self.base.vertex_count)))

    # -- basic queries ---------------------------------------------------

    def present_edges(self) -> list[int]:
        return [e for e, st in enumerate(self.status, start=1) if st == PRESENT]

    def is_present(self, e: int) -> bool:
        return 1 <= e <= len(self.status) and self.status[e - 1] == PRESENT

    def cls(self, v: int) -> int:
        return self.cls_of[v]

    def classes(self) -> list[int]:
        return sorted(set(self.cls_of))

    def ends(self, e: int) -> tuple[int, int]:
        """Endpoint classes (tail class, head class) of a base edge."""
        tail, head = self.base.endpoints(e)
        return self.cls_of[tail], self.cls_of[head]

    def _require_present(self, e: int):
        if not self.is_present(e):
            raise InvalidEdgeError(f"edge {e} is not present in this view")

    def is_view_loop(self, e: int) -> bool:
        self._require_present(e)
        a, b = self.ends(e)
        return a == b

    # -- minors ----------------------------------------------------------

    def delete(self, e: int) -> GraphView:
        self._require_present(e)
        st = list(self.status)
        st[e - 1] = DELETED
        return GraphView(self.base, tuple(st))

    def contract(self, e: int) -> GraphView:
        # contracting a loop of the view is deletion, by convention
        self._require_present(e)
        if self.is_view_loop(e):
            return self.delete(e)
        st = list(self.status)
        st[e - 1] = CONTRACTED
        return GraphView(self.base, tuple(st))

    def is_loop(self, e: int) -> bool:
        return self.is_view_loop(e)

    def is_bridge(self, e: int) -> bool:
        self._require_present(e)
        if self.is_view_loop(e):
            return False
        before = len(connected_components(self))
        after = len(connected_components(self.delete(e)))
        return after > before


def connected_components(view: GraphView, edge_subset=None) -> list[frozenset[int]]:
    """Partition of the view's vertex classes into connected components.

    With ``edge_subset`` the components are taken over that subset of
    present edges instead of all of them.
    """
    if edge_subset is None:
        edge_subset = view.present_edges()
    else:
        edge_subset = list(edge_subset)
        for e in edge_subset:
            view._require_present(e)
    parent = {c: c for c in view.classes()}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in edge_subset:
        a, b = view.ends(e)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, set[int]] = {}
    for c in parent:
        groups.setdefault(find(c), set()).add(c)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def _is_forest(view: GraphView, edge_set) -> bool:
    parent = {}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in edge_set:
        a, b = view.ends(e)
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def forest_rank(view: GraphView) -> int:
    """Size of every spanning forest: #classes - #components."""
    return len(view.classes()) - len(connected_components(view))


def spanning_forests(view: GraphView, cap: int = FOREST_CAP) -> list[tuple[int, ...]]:
    """All maximal acyclic present-edge subsets, in lexicographic order."""
    present = view.present_edges()
    rank = forest_rank(view)
    if comb(len(present), rank) > cap:
        raise ResourceCapError(
            f"C({len(present)},{rank}) candidate forests exceed cap {cap}"
        )
    return [
        combo
        for combo in itertools.combinations(present, rank)
        if _is_forest(view, combo)
    ]


def is_spanning_forest(view: GraphView, edge_set) -> bool:
    edge_set = sorted(set(edge_set))
    for e in edge_set:
        if not view.is_present(e):
            return False
    return len(edge_set) == forest_rank(view) and _is_forest(view, edge_set)


def fundamental_cut(view: GraphView, forest, e: int) -> frozenset[int]:
    """U_F(e): present edges whose swap for ``e`` keeps F a spanning forest."""
    forest = frozenset(forest)
    if e not in forest:
        raise InvalidInputError(f"edge {e} is not in the forest")
    rest = forest - {e}
    return frozenset(
        ej for ej in view.present_edges() if _is_forest(view, rest | {ej})
        and len(rest | {ej}) == len(forest)
    )


def fundamental_cycle(view: GraphView, forest, e: int) -> frozenset[int]:
    """Z_F(e): the unique cycle of F + e, found by leaf pruning."""
    forest = frozenset(forest)
    if e in forest:
        raise InvalidInputError(f"edge {e} is already in the forest")
    view._require_present(e)
    edges = set(forest) | {e}
    # prune non-loop edges hanging off degree-1 classes until only the cycle remains
    while True:
        degree: dict[int, int] = {}
        for ej in edges:
            a, b = view.ends(ej)
            if a != b:
                degree[a] = degree.get(a, 0) + 1
                degree[b] = degree.get(b, 0) + 1
        leaves = {c for c, d in degree.items() if d == 1}
        if not leaves:
            break
        edges = {
            ej
            for ej in edges
            if not (set(view.ends(ej)) & leaves) or view.is_view_loop(ej)
        }
    if not edges:
        raise InvalidInputError(f"F + {e} is acyclic; no fundamental cycle")
    return frozenset(edges)


def activities(view: GraphView, forest) -> tuple[int, int]:
    """(internal, external) activity counts of a spanning forest."""
    forest = frozenset(forest)
    internal = sum(1 for e in forest if e == min(fundamental_cut(view, forest, e)))
    external = sum(
        1
        for e in view.present_edges()
        if e not in forest and e == min(fundamental_cycle(view, forest, e))
    )
    return internal, external
