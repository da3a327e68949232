"""Exact combinatorics of multigraph orientations: Tutte polynomials,
cut / Eulerian / Eulerian-cut equivalence classes, and the staged
bijection between Eulerian classes of totally cyclic orientations and
spanning trees with zero internal activity."""

from .bijection import (
    NormalContext,
    StageState,
    contraction_of,
    forward,
    in_stage_set,
    inverse,
    inverse_stage,
    is_reduced,
    normalize,
    stage_conditions,
    stage_step,
)
from .equivalence import (
    alpha,
    classes,
    classes_by_flips,
    cut_equivalent,
    difference_set,
    eulerian_cut_equivalent,
    eulerian_equivalent,
    restricted_orientations,
    unique_source_count,
    verify_identities,
)
from .errors import (
    GraphParseError,
    InternalInvariantError,
    InvalidEdgeError,
    InvalidInputError,
    NoTotallyCyclicError,
    ResourceCapError,
)
from .multigraph import (
    GraphView,
    Multigraph,
    activities,
    connected_components,
    fundamental_cut,
    fundamental_cycle,
    is_spanning_forest,
    spanning_forests,
)
from .orientation import (
    Orientation,
    directed_cut_oracle,
    enumerate_orientations,
    is_acyclic,
    is_cut_flippable,
    is_cycle_flippable,
    is_directed_cut,
    is_directed_eulerian,
    is_totally_cyclic,
    reachable,
    reverse_edges,
)
from .tutte import (
    TuttePolynomial,
    evaluate,
    tutte_activity_expansion,
    tutte_deletion_contraction,
)

__version__ = "0.1.0"
