"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: parse errors -> 2,
invalid inputs -> 3, resource caps -> 4.
"""


class GraphParseError(ValueError):
    """Malformed graph text (bad line, endpoint out of range, zero vertices)."""


class InvalidEdgeError(ValueError):
    """An edge index that is absent, deleted, or out of range for the view."""


class InvalidInputError(ValueError):
    """Structurally valid arguments that violate an operation's precondition."""


class NoTotallyCyclicError(InvalidInputError):
    """The graph admits no totally cyclic orientation (it has a bridge),
    or the supplied orientation is not totally cyclic."""


class ResourceCapError(RuntimeError):
    """An enumeration exceeded its configured cap."""


class InternalInvariantError(RuntimeError):
    """A postcondition that theory guarantees has failed; signals a bug."""
