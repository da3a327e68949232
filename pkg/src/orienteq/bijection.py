"""The staged bijection between Eulerian equivalence classes of totally
cyclic orientations and spanning trees with zero internal activity.

A StageState carries a partial orientation: each edge is oriented (one
direction bit), unoriented, or deleted.  The forward map processes edges
from largest to smallest, normalizing to the unique reduced orientation
of the contraction before and after each unorient/delete action; the
inverse map re-adds edges one at a time, searching the Eulerian class for
the unique preimage.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    InternalInvariantError,
    InvalidInputError,
    NoTotallyCyclicError,
)
from .multigraph import (
    CONTRACTED,
    DELETED,
    PRESENT,
    GraphView,
    Multigraph,
    _is_forest,
    activities,
    connected_components,
    is_spanning_forest,
)
from .orientation import (
    Orientation,
    is_cycle_flippable,
    is_totally_cyclic,
)

UNORIENTED = "U"
DELETED_EDGE = "D"


@dataclass(frozen=True)
class NormalContext:
    """Base graph plus the fixed normal orientation (one bit per edge).
    The activity order is the graph's edge order."""

    graph: Multigraph
    normal: tuple[bool, ...]

    def __post_init__(self):
        if len(self.normal) != self.graph.edge_count:
            raise InvalidInputError("normal orientation length mismatch")
        object.__setattr__(self, "normal", tuple(map(bool, self.normal)))

    @staticmethod
    def with_default_normal(graph: Multigraph) -> NormalContext:
        # default normal orientation: every edge as written, i.e. "+"^m
        return NormalContext(graph, (True,) * graph.edge_count)

    def normal_bit(self, e: int) -> bool:
        return self.normal[e - 1]


@dataclass(frozen=True)
class StageState:
    """Partial orientation: statuses[i] is the bit (bool) of edge i+1 when
    oriented, or "U"/"D" for unoriented/deleted edges."""

    context: NormalContext
    statuses: tuple

    def __post_init__(self):
        if len(self.statuses) != self.context.graph.edge_count:
            raise InvalidInputError("status length mismatch")

    @property
    def q(self) -> int:
        return self.context.graph.edge_count

    @property
    def stage(self) -> int:
        return self.q - len(self.oriented_edges())

    def status(self, e: int):
        return self.statuses[e - 1]

    def oriented_edges(self) -> list[int]:
        return [e for e, st in enumerate(self.statuses, start=1) if isinstance(st, bool)]

    def unoriented_edges(self) -> list[int]:
        return [e for e, st in enumerate(self.statuses, start=1) if st == UNORIENTED]

    def deleted_edges(self) -> list[int]:
        return [e for e, st in enumerate(self.statuses, start=1) if st == DELETED_EDGE]

    def replace(self, e: int, status) -> StageState:
        st = list(self.statuses)
        st[e - 1] = status
        return StageState(self.context, tuple(st))


def contraction_of(state: StageState) -> tuple[GraphView, Orientation]:
    """View with unoriented edges contracted and deleted edges deleted,
    plus the inherited orientation of the remaining edges."""
    view_status = []
    for st in state.statuses:
        if st == UNORIENTED:
            view_status.append(CONTRACTED)
        elif st == DELETED_EDGE:
            view_status.append(DELETED)
        else:
            view_status.append(PRESENT)
    view = GraphView(state.context.graph, tuple(view_status))
    bits = {e: state.status(e) for e in state.oriented_edges()}
    return view, Orientation.make(view, bits)


def _small_edge_path(eps: Orientation, start: int, goal: int, below: int | None, rng=None):
    """A simple directed path start -> goal using arcs with edge id below
    the bound (no bound when None).  Deterministically the one with the
    lexicographically smallest edge-id sequence (DFS, smallest edge
    first); with an rng, a uniformly random choice among all such paths.
    Returns a list of edge ids, or None."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for a, b, e in eps.arcs():
        if a == b or (below is not None and e >= below):
            continue
        adj.setdefault(a, []).append((e, b))
    for lst in adj.values():
        lst.sort()
    if start == goal:
        return []

    if rng is None:
        # first complete path of a smallest-edge-first DFS is lex smallest
        stack = [(start, frozenset([start]), [])]
        while stack:
            vertex, visited, path = stack.pop()
            if vertex == goal:
                return path
            for e, nxt in reversed(adj.get(vertex, ())):
                if nxt == goal or nxt not in visited:
                    stack.append((nxt, visited | {nxt}, path + [e]))
        return None

    paths = []

    def collect(vertex, visited, path):
        for e, nxt in adj.get(vertex, ()):
            if nxt == goal:
                paths.append(path + [e])
            elif nxt not in visited:
                collect(nxt, visited | {nxt}, path + [e])

    collect(start, frozenset([start]), [])
    return rng.choice(paths) if paths else None


def _cycle_through(view: GraphView, eps: Orientation, e: int, below=None, rng=None):
    """Edge set of a directed cycle through e (other edges limited to ids
    below the bound when given), or None."""
    if view.is_view_loop(e):
        return frozenset([e])
    u, v = eps.arc(e)
    path = _small_edge_path(eps, v, u, below, rng=rng)
    if path is None:
        return None
    return frozenset([e]) | frozenset(path)


def _violating_edge(state: StageState):
    """Largest oriented edge of the contraction breaking the reduced
    property, or None."""
    view, eps = contraction_of(state)
    for e, bit in sorted(eps.bits, reverse=True):
        if bit == state.context.normal_bit(e):
            continue
        if _cycle_through(view, eps, e, below=e) is not None:
            return e
    return None


def is_reduced(state: StageState) -> bool:
    """No oriented edge of the contraction disagrees with the normal
    orientation while lying on a directed cycle whose other edges are all
    smaller."""
    return _violating_edge(state) is None


def normalize(state: StageState, rng=None, log=None) -> StageState:
    """The unique reduced state Eulerian-equivalent to the input.

    Repeatedly reverses, for the largest violating edge, a directed cycle
    through it with all other edges smaller.  Requires the contraction to
    be totally cyclic; fuel-bounded as a bug tripwire.
    """
    view, eps = contraction_of(state)
    if not is_totally_cyclic(view, eps):
        raise InvalidInputError("normalize requires a totally cyclic contraction")
    fuel = 2 ** state.q + 1
    while True:
        e0 = _violating_edge(state)
        if e0 is None:
            return state
        fuel -= 1
        if fuel <= 0:
            raise InternalInvariantError("normalization exceeded its reversal budget")
        view, eps = contraction_of(state)
        cycle = _cycle_through(view, eps, e0, below=e0, rng=rng)
        statuses = list(state.statuses)
        for e in cycle:
            statuses[e - 1] = not statuses[e - 1]
        state = StageState(state.context, tuple(statuses))
        if log is not None:
            log.append(
                {"action": "normalize-reversal", "edge": e0, "cycle": sorted(cycle)}
            )


def stage_conditions(state: StageState) -> dict[str, bool]:
    """The four membership conditions of the stage sets, individually."""
    graph = state.context.graph
    q = graph.edge_count
    oriented = state.oriented_edges()
    k = q - len(oriented)
    full = graph.full_view()

    prefix_oriented = oriented == list(range(1, q - k + 1))
    unoriented_forest = _is_forest(full, state.unoriented_edges())
    cond_a = prefix_oriented and unoriented_forest

    view, eps = contraction_of(state)
    cond_b = is_totally_cyclic(view, eps)
    cond_c = is_reduced(state)

    cond_d = True
    subgraph = [e for e in graph.edge_ids if state.status(e) != DELETED_EDGE]
    n_comps = len(connected_components(full, subgraph))
    for e in state.unoriented_edges():
        rest = [x for x in subgraph if x != e]
        comps = connected_components(full, rest)
        if len(comps) == n_comps:
            continue  # not a bridge of the subgraph
        tail, head = graph.endpoints(e)
        side = next(c for c in comps if tail in c)
        cut = [
            x
            for x in graph.edge_ids
            if (graph.endpoints(x)[0] in side) != (graph.endpoints(x)[1] in side)
        ]
        if min(cut) >= e:
            cond_d = False
            break

    return {"a": cond_a, "b": cond_b, "c": cond_c, "d": cond_d}


def in_stage_set(state: StageState) -> bool:
    return all(stage_conditions(state).values())


def _require_stage_set(state: StageState, where: str):
    conds = stage_conditions(state)
    bad = [name for name, ok in conds.items() if not ok]
    if bad:
        raise InternalInvariantError(
            f"{where}: stage conditions {bad} violated at stage {state.stage}"
        )


def stage_step(state: StageState, log=None) -> StageState:
    """One pass of the algorithm: normalize, then delete the largest
    oriented edge if it is a loop of the contraction or cycle flippable
    there, otherwise unorient it; normalize again."""
    oriented = state.oriented_edges()
    if not oriented:
        raise InvalidInputError("no oriented edge left to process")
    state = normalize(state, log=log)
    view, eps = contraction_of(state)
    e = max(oriented)
    if view.is_view_loop(e) or is_cycle_flippable(view, eps, e):
        action = DELETED_EDGE
    else:
        action = UNORIENTED
    nxt = normalize(state.replace(e, action), log=log)
    if log is not None:
        log.append(
            {
                "action": "delete" if action == DELETED_EDGE else "unorient",
                "edge": e,
                "stage": nxt.stage,
                "contraction": _contraction_summary(nxt),
            }
        )
    _require_stage_set(nxt, "stage_step")
    return nxt


def _contraction_summary(state: StageState) -> dict:
    view, eps = contraction_of(state)
    return {
        "vertices": len(view.classes()),
        "oriented_edges": view.present_edges(),
        "orientation": eps.as_string(),
    }


def initial_state(context: NormalContext, eps: Orientation) -> StageState:
    """All-oriented state for a totally cyclic orientation of the full graph."""
    graph = context.graph
    view = eps.view
    if view != graph.full_view():
        raise InvalidInputError("orientation must be on the full graph")
    if not graph.is_connected():
        raise InvalidInputError("the bijection is defined for connected graphs")
    if not is_totally_cyclic(view, eps):
        raise NoTotallyCyclicError("orientation is not totally cyclic")
    bits = eps.bit_map()
    return StageState(context, tuple(bits[e] for e in graph.edge_ids))


def forward(context: NormalContext, eps: Orientation, log=None) -> tuple[int, ...]:
    """Map a totally cyclic orientation to the spanning tree (zero internal
    activity) of its Eulerian equivalence class."""
    state = normalize(initial_state(context, eps), log=log)
    _require_stage_set(state, "forward entry")
    for _ in range(state.q):
        state = stage_step(state, log=log)
    tree = tuple(state.unoriented_edges())
    full = context.graph.full_view()
    if not is_spanning_forest(full, tree):
        raise InternalInvariantError("forward output is not a spanning tree")
    internal, _external = activities(full, tree)
    if internal != 0:
        raise InternalInvariantError("forward output has internal activity")
    return tree


def inverse_stage(state: StageState, k: int, rng=None) -> StageState:
    """The unique preimage of a stage-k state under the k-th step."""
    if state.stage != k or not in_stage_set(state):
        raise InvalidInputError(f"state is not a valid stage-{k} element")
    e = state.q - k + 1
    context = state.context

    if state.status(e) == DELETED_EDGE:
        prev = state.replace(e, context.normal_bit(e))
        _require_stage_set(prev, "inverse_stage (deleted case)")
        view, eps = contraction_of(prev)
        if not is_cycle_flippable(view, eps, e):
            raise InternalInvariantError(
                "re-added deleted edge is not cycle flippable"
            )
        return prev

    if state.status(e) != UNORIENTED:
        raise InvalidInputError(f"edge {e} was not processed at stage {k}")

    candidate = None
    for bit in (context.normal_bit(e), not context.normal_bit(e)):
        trial = state.replace(e, bit)
        view, eps = contraction_of(trial)
        if is_totally_cyclic(view, eps):
            candidate = trial
            break
    if candidate is None:
        raise InternalInvariantError(
            "no orientation of the re-added edge is totally cyclic"
        )

    fuel = 2 ** state.q + 1
    while fuel > 0:
        fuel -= 1
        candidate = normalize(candidate, rng=rng)
        view, eps = contraction_of(candidate)
        if not is_cycle_flippable(view, eps, e):
            if in_stage_set(candidate) and stage_step(candidate) == state:
                return candidate
            break
        # flip e, then reverse a directed cycle through the flipped e
        flipped = candidate.replace(e, not candidate.status(e))
        view, eps = contraction_of(flipped)
        cycle = _cycle_through(view, eps, e, rng=rng)
        if cycle is None:
            break
        statuses = list(flipped.statuses)
        for x in cycle:
            statuses[x - 1] = not statuses[x - 1]
        candidate = StageState(context, tuple(statuses))

    return _inverse_stage_fallback(state, e)


def _inverse_stage_fallback(state: StageState, e: int) -> StageState:
    """Certified search: enumerate all bit assignments of the oriented
    edges and return the member of the previous stage set that the forward
    step maps back onto the input."""
    ids = list(range(1, e + 1))
    for mask in range(2 ** len(ids)):
        statuses = list(state.statuses)
        for i, x in enumerate(ids):
            statuses[x - 1] = not (mask >> (len(ids) - 1 - i)) & 1
        candidate = StageState(state.context, tuple(statuses))
        view, eps = contraction_of(candidate)
        if not is_totally_cyclic(view, eps):
            continue
        if not in_stage_set(candidate):
            continue
        if stage_step(candidate) == state:
            return candidate
    raise InternalInvariantError(f"no stage preimage exists for edge {e}")


def inverse(context: NormalContext, tree, rng=None) -> Orientation:
    """Map a zero-internal-activity spanning tree back to the reduced
    totally cyclic orientation of its class."""
    graph = context.graph
    if not graph.is_connected():
        raise InvalidInputError("the bijection is defined for connected graphs")
    full = graph.full_view()
    if any(full.is_bridge(e) for e in graph.edge_ids):
        raise NoTotallyCyclicError("graph has a bridge, hence no totally cyclic orientation")
    tree = tuple(sorted(set(tree)))
    if not is_spanning_forest(full, tree) or len(connected_components(full, tree)) != 1:
        raise InvalidInputError(f"{tree} is not a spanning tree")
    internal, _external = activities(full, tree)
    if internal != 0:
        raise InvalidInputError(
            "tree has internally active edges; it is outside the bijection's image"
        )
    statuses = tuple(
        UNORIENTED if e in tree else DELETED_EDGE for e in graph.edge_ids
    )
    state = StageState(context, statuses)
    for k in range(state.q, 0, -1):
        state = inverse_stage(state, k, rng=rng)
    _view, eps = contraction_of(state)
    return eps
