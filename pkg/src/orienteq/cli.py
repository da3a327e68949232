"""Command-line surface.

Exit codes: 0 success, 1 a verified identity failed, 2 parse error,
3 invalid input, 4 resource cap exceeded.  Output is JSON on stdout and
is byte-identical across identical invocations.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bijection, corpus, equivalence, tutte
from .errors import (
    GraphParseError,
    InvalidEdgeError,
    InvalidInputError,
    ResourceCapError,
)
from .multigraph import Multigraph
from .orientation import Orientation, enumerate_orientations, is_acyclic, is_totally_cyclic

EXIT_OK = 0
EXIT_IDENTITY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_INVALID_INPUT = 3
EXIT_CAP_EXCEEDED = 4


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def _load_graph(path: str) -> Multigraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphParseError(f"cannot read {path}: {exc}")
    return corpus.parse_graph(text)


def _parse_order(spec: str, m: int) -> tuple[int, ...]:
    try:
        order = tuple(int(tok) for tok in spec.split(","))
    except ValueError:
        raise InvalidInputError(f"bad --order value {spec!r}")
    if sorted(order) != list(range(1, m + 1)):
        raise InvalidInputError(f"--order must be a permutation of 1..{m}")
    return order


class Problem:
    """A graph together with an optional activity-order permutation.

    All CLI-facing edge ids and orientation-string positions refer to the
    file order; the permutation only changes which edge is 'smaller'.
    """

    def __init__(self, graph: Multigraph, order: tuple[int, ...] | None):
        self.file_graph = graph
        self.order = order or tuple(graph.edge_ids)
        self.graph = graph.reorder(self.order)

    def string_to_internal(self, s: str) -> str:
        if len(s) != self.graph.edge_count:
            raise InvalidInputError(
                f"orientation string must have {self.graph.edge_count} characters"
            )
        return "".join(s[e - 1] for e in self.order)

    def string_to_file(self, s: str) -> str:
        out = [""] * len(s)
        for pos, e in enumerate(self.order):
            out[e - 1] = s[pos]
        return "".join(out)

    def tree_to_file(self, tree) -> list[int]:
        return sorted(self.order[e - 1] for e in tree)

    def tree_to_internal(self, tree) -> list[int]:
        rank = {e: pos + 1 for pos, e in enumerate(self.order)}
        try:
            return sorted(rank[e] for e in tree)
        except KeyError as exc:
            raise InvalidInputError(f"bad edge index {exc.args[0]}")


def _problem(args) -> Problem:
    graph = _load_graph(args.graph)
    order = _parse_order(args.order, graph.edge_count) if getattr(args, "order", None) else None
    return Problem(graph, order)


def _context(problem: Problem, normal: str | None) -> bijection.NormalContext:
    if normal is None:
        return bijection.NormalContext.with_default_normal(problem.graph)
    eps = Orientation.from_string(
        problem.graph.full_view(), problem.string_to_internal(normal)
    )
    bits = eps.bit_map()
    return bijection.NormalContext(
        problem.graph, tuple(bits[e] for e in problem.graph.edge_ids)
    )


def cmd_tutte(args) -> int:
    problem = _problem(args)
    poly = tutte.tutte_deletion_contraction(problem.graph.full_view())
    _emit(poly.to_json())
    return EXIT_OK


def cmd_orientations(args) -> int:
    problem = _problem(args)
    view = problem.graph.full_view()
    rows = []
    acyclic = cyclic = 0
    for eps in enumerate_orientations(view, cap=args.cap):
        a = is_acyclic(view, eps)
        t = is_totally_cyclic(view, eps)
        acyclic += a
        cyclic += t
        rows.append(
            {
                "orientation": problem.string_to_file(eps.as_string()),
                "acyclic": a,
                "totally_cyclic": t,
            }
        )
    _emit(
        {
            "total": len(rows),
            "acyclic": acyclic,
            "totally_cyclic": cyclic,
            "orientations": rows,
        }
    )
    return EXIT_OK


def cmd_classes(args) -> int:
    problem = _problem(args)
    view = problem.graph.full_view()
    partition = equivalence.classes_by_flips(view, args.relation, args.restrict, cap=args.cap)
    _emit(
        {
            "relation": args.relation,
            "restriction": args.restrict,
            "count": partition.count,
            "blocks": [
                [problem.string_to_file(s) for s in block]
                for block in partition.block_strings()
            ],
        }
    )
    return EXIT_OK


def cmd_bijection_forward(args) -> int:
    problem = _problem(args)
    context = _context(problem, args.normal)
    eps = Orientation.from_string(
        problem.graph.full_view(), problem.string_to_internal(args.orientation)
    )
    log = [] if args.trace else None
    tree = bijection.forward(context, eps, log=log)
    payload = {"tree": problem.tree_to_file(tree)}
    if args.trace:
        for event in log:
            if "edge" in event:
                event["edge"] = problem.order[event["edge"] - 1]
            if "cycle" in event:
                event["cycle"] = sorted(problem.order[e - 1] for e in event["cycle"])
        payload["trace"] = log
    _emit(payload)
    return EXIT_OK


def cmd_bijection_inverse(args) -> int:
    problem = _problem(args)
    context = _context(problem, args.normal)
    try:
        file_tree = [int(tok) for tok in args.tree.split(",")] if args.tree else []
    except ValueError:
        raise InvalidInputError(f"bad tree spec {args.tree!r}")
    eps = bijection.inverse(context, problem.tree_to_internal(file_tree))
    _emit({"orientation": problem.string_to_file(eps.as_string())})
    return EXIT_OK


def cmd_verify(args) -> int:
    problem = _problem(args)
    report = equivalence.verify_identities(problem.graph.full_view(), cap=args.cap)
    failed = report["_summary"]["failed"]
    _emit({"identities": report, "ok": failed == 0})
    return EXIT_OK if failed == 0 else EXIT_IDENTITY_FAILED


def cmd_corpus(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    graphs = corpus.full_corpus(
        seed=args.seed,
        count=args.count,
        max_vertices=args.max_vertices,
        max_edges=args.max_edges,
    )
    written = []
    for name in sorted(graphs):
        path = out / f"{name}.g"
        path.write_text(corpus.format_graph(graphs[name]))
        written.append(str(path))
    _emit({"seed": args.seed, "files": written})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orienteq",
        description="Tutte polynomials, orientation equivalence classes, "
        "and the activity bijection for multigraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("graph", help="graph file ('v N' then 'e U V' lines)")
        p.add_argument("--order", help="edge-order permutation, e.g. 3,1,2")
        p.add_argument("--cap", type=int, default=20, help="orientation enumeration cap (edges)")
        p.set_defaults(func=func)
        return p

    graph_command("tutte", cmd_tutte, help="Tutte polynomial and special evaluations")
    graph_command("orientations", cmd_orientations, help="enumerate orientations with predicates")

    p = graph_command("classes", cmd_classes, help="equivalence classes of orientations")
    p.add_argument("--relation", choices=equivalence.RELATIONS, default="eulerian")
    p.add_argument("--restrict", choices=equivalence.RESTRICTIONS, default="totally_cyclic")

    p = graph_command("bijection-forward", cmd_bijection_forward,
                      help="totally cyclic orientation -> spanning tree")
    p.add_argument("orientation", help="+/- string, position i = edge i of the file")
    p.add_argument("--normal", help="normal orientation (+/- string); default all '+'")
    p.add_argument("--trace", action="store_true", help="emit per-stage events")

    p = graph_command("bijection-inverse", cmd_bijection_inverse,
                      help="spanning tree -> reduced totally cyclic orientation")
    p.add_argument("tree", help="comma-separated 1-based edge indices")
    p.add_argument("--normal", help="normal orientation (+/- string); default all '+'")

    graph_command("verify", cmd_verify, help="check every Tutte-evaluation identity")

    p = sub.add_parser("corpus", help="write the named + seeded random graph files")
    p.add_argument("--out", default="corpus", help="output directory")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--max-vertices", type=int, default=6)
    p.add_argument("--max-edges", type=int, default=9)
    p.set_defaults(func=cmd_corpus)

    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphParseError as exc:
        _emit({"error": str(exc), "kind": "parse"})
        return EXIT_PARSE_ERROR
    except (InvalidInputError, InvalidEdgeError) as exc:
        _emit({"error": str(exc), "kind": "invalid-input"})
        return EXIT_INVALID_INPUT
    except ResourceCapError as exc:
        _emit({"error": str(exc), "kind": "resource-cap"})
        return EXIT_CAP_EXCEEDED


def main() -> None:
    sys.exit(run())
