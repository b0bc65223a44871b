"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction or a structurally impossible request."""


class Graph6Error(GraphError):
    """Malformed graph6 input."""


class BoundExceededError(GraphError):
    """An exact solver or oracle was asked for an instance above its size bound."""
