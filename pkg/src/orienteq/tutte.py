"""Tutte polynomials by deletion-contraction and by the activity expansion.

Coefficients are exact Python integers; t[i, j] counts spanning forests
with internal activity i and external activity j.
"""

from __future__ import annotations

from dataclasses import dataclass

from .multigraph import GraphView, activities, spanning_forests, FOREST_CAP

EVAL_POINTS = ((0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 0), (0, 2))


@dataclass(frozen=True)
class TuttePolynomial:
    coeffs: tuple[tuple[int, int, int], ...]  # sorted (i, j, t_ij), t_ij != 0

    @staticmethod
    def from_dict(d: dict[tuple[int, int], int]) -> TuttePolynomial:
        return TuttePolynomial(
            tuple(sorted((i, j, t) for (i, j), t in d.items() if t != 0))
        )

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(i, j): t for i, j, t in self.coeffs}

    def evaluate(self, x: int, y: int) -> int:
        return sum(t * x**i * y**j for i, j, t in self.coeffs)

    def __add__(self, other: TuttePolynomial) -> TuttePolynomial:
        d = self.as_dict()
        for key, t in other.as_dict().items():
            d[key] = d.get(key, 0) + t
        return TuttePolynomial.from_dict(d)

    def shift(self, di: int, dj: int) -> TuttePolynomial:
        """Multiply by x^di * y^dj."""
        return TuttePolynomial(
            tuple(sorted((i + di, j + dj, t) for i, j, t in self.coeffs))
        )

    def to_json(self) -> dict:
        return {
            "coeffs": [[i, j, t] for i, j, t in self.coeffs],
            "evals": {f"({x},{y})": self.evaluate(x, y) for x, y in EVAL_POINTS},
        }

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, j, t in sorted(self.coeffs, key=lambda c: (-c[0], -c[1])):
            parts = [] if t == 1 and (i or j) else [str(t)]
            if i:
                parts.append("x" if i == 1 else f"x^{i}")
            if j:
                parts.append("y" if j == 1 else f"y^{j}")
            terms.append("*".join(parts))
        return " + ".join(terms)


ONE = TuttePolynomial(((0, 0, 1),))


def _canonical_key(view: GraphView) -> tuple:
    """Present edges with classes relabeled by first appearance; views with
    the same key have the same polynomial (isolated vertices contribute 1)."""
    pairs = sorted(tuple(sorted(view.ends(e))) for e in view.present_edges())
    relabel: dict[int, int] = {}
    out = []
    for a, b in pairs:
        for v in (a, b):
            if v not in relabel:
                relabel[v] = len(relabel)
        out.append((relabel[a], relabel[b]))
    return tuple(sorted(out))


def tutte_deletion_contraction(view: GraphView, _memo=None) -> TuttePolynomial:
    """Deletion-contraction with the smallest present edge as pivot."""
    if _memo is None:
        _memo = {}
    present = view.present_edges()
    if not present:
        return ONE
    key = _canonical_key(view)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    e = present[0]
    if view.is_view_loop(e):
        result = tutte_deletion_contraction(view.delete(e), _memo).shift(0, 1)
    elif view.is_bridge(e):
        result = tutte_deletion_contraction(view.contract(e), _memo).shift(1, 0)
    else:
        result = tutte_deletion_contraction(view.delete(e), _memo) + tutte_deletion_contraction(
            view.contract(e), _memo
        )
    _memo[key] = result
    return result


def tutte_activity_expansion(view: GraphView, cap: int = FOREST_CAP) -> TuttePolynomial:
    """t_ij = number of spanning forests with activities (i, j)."""
    tally: dict[tuple[int, int], int] = {}
    for forest in spanning_forests(view, cap=cap):
        ij = activities(view, forest)
        tally[ij] = tally.get(ij, 0) + 1
    if not tally:
        # edgeless view still has the empty forest
        tally[(0, 0)] = 1
    return TuttePolynomial.from_dict(tally)


def evaluate(p: TuttePolynomial, x: int, y: int) -> int:
    return p.evaluate(x, y)
