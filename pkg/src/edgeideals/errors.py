"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Malformed graph data: endpoint out of range, loop, bad text format."""


class NotClosedError(ValueError):
    """The input graph is not closed, but the operation requires it.

    `witness` carries a human-readable obstruction (an edge pair violating
    the interval condition, or a note that no closed labeling exists).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceCapError(RuntimeError):
    """An exhaustive sweep would exceed a documented resource cap."""
