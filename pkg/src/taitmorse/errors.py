"""Exception types shared across the package."""


class PdError(ValueError):
    """Malformed or invalid PD code text.

    ``position`` is the character offset of a syntax error, or ``None``.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.position = position


class MapError(ValueError):
    """A rotation system that is not a connected map of the sphere."""


class ColoringError(ValueError):
    """Face adjacency is not bipartite."""


class RestrictionError(ValueError):
    """Star pair does not share a square face of the overlaid graph."""


class CapExceeded(ValueError):
    """Input too large for an exhaustive oracle."""


class InvariantError(RuntimeError):
    """A construction produced output violating a proven invariant.

    Raised instead of returning the bad value; always indicates a bug.
    """
