"""Graph text format plus the fixed and seeded test corpora.

Format: a "v N" line, then one "e U V" line per edge (file order is the
activity order); '#' starts a comment line.
"""

from __future__ import annotations

import random

from .errors import GraphParseError
from .multigraph import Multigraph


def parse_graph(text: str) -> Multigraph:
    vertex_count = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            if vertex_count is not None:
                raise GraphParseError(f"line {lineno}: duplicate vertex line")
            try:
                vertex_count = int(parts[1])
            except ValueError:
                raise GraphParseError(f"line {lineno}: bad vertex count {parts[1]!r}")
            if vertex_count <= 0:
                raise GraphParseError(f"line {lineno}: vertex count must be positive")
        elif parts[0] == "e" and len(parts) == 3:
            if vertex_count is None:
                raise GraphParseError(f"line {lineno}: edge before vertex line")
            try:
                tail, head = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError(f"line {lineno}: bad edge {line!r}")
            if not (0 <= tail < vertex_count and 0 <= head < vertex_count):
                raise GraphParseError(f"line {lineno}: endpoint out of range")
            edges.append((tail, head))
        else:
            raise GraphParseError(f"line {lineno}: unrecognized line {line!r}")
    if vertex_count is None:
        raise GraphParseError("missing vertex line")
    return Multigraph(vertex_count, tuple(edges))


def format_graph(graph: Multigraph) -> str:
    lines = [f"v {graph.vertex_count}"]
    lines += [f"e {tail} {head}" for tail, head in graph.edges]
    return "\n".join(lines) + "\n"


def named_graphs() -> dict[str, Multigraph]:
    """The fixed desk-scale instances used throughout the test corpus."""
    k4_edges = tuple(
        (u, v) for u in range(4) for v in range(u + 1, 4)
    )
    return {
        "C3": Multigraph(3, ((0, 1), (1, 2), (2, 0))),
        "C4": Multigraph(4, ((0, 1), (1, 2), (2, 3), (3, 0))),
        "D2": Multigraph(2, ((0, 1), (0, 1))),
        "P3E": Multigraph(2, ((0, 1), (0, 1), (0, 1))),
        "B1": Multigraph(2, ((0, 1),)),
        "L1": Multigraph(1, ((0, 0),)),
        "K4": Multigraph(4, k4_edges),
        "K4me": Multigraph(4, k4_edges[:-1]),
        # two vertices joined by three internally disjoint paths
        "theta": Multigraph(4, ((0, 1), (0, 2), (2, 1), (0, 3), (3, 1))),
    }


def random_connected_multigraph(rng: random.Random, max_vertices: int = 6, max_edges: int = 9) -> Multigraph:
    """A seeded random connected multigraph; loops and parallels allowed."""
    n = rng.randint(1, max_vertices)
    edges = []
    order = list(range(n))
    rng.shuffle(order)
    for i, v in enumerate(order[1:], start=1):
        edges.append((rng.choice(order[:i]), v))
    extra = rng.randint(0, max_edges - len(edges))
    for _ in range(extra):
        edges.append((rng.randrange(n), rng.randrange(n)))
    rng.shuffle(edges)
    return Multigraph(n, tuple(edges))


def random_corpus(seed: int, count: int = 50, max_vertices: int = 6, max_edges: int = 9) -> list[Multigraph]:
    rng = random.Random(seed)
    return [
        random_connected_multigraph(rng, max_vertices, max_edges) for _ in range(count)
    ]


def full_corpus(seed: int = 0, count: int = 50, max_vertices: int = 6, max_edges: int = 9) -> dict[str, Multigraph]:
    """Named graphs plus the seeded random batch, within the size limits."""
    graphs = {
        name: g
        for name, g in named_graphs().items()
        if g.vertex_count <= max_vertices and g.edge_count <= max_edges
    }
    for i, g in enumerate(random_corpus(seed, count, max_vertices, max_edges)):
        graphs[f"rand{i:02d}"] = g
    return graphs
