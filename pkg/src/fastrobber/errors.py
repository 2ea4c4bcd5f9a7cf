"""Exception types shared across the toolkit."""


class ParseError(ValueError):
    """Malformed edge-list document."""


class InvalidEdge(ValueError):
    """Edge with a loop or an out-of-range endpoint."""


class NotConnected(ValueError):
    """Operation requires a connected graph."""


class SourceForbidden(ValueError):
    """Reachability query started from a forbidden vertex."""


class EmptyFactor(ValueError):
    """Cartesian product over an empty factor list or an empty graph."""


class BudgetExceeded(RuntimeError):
    """Instance larger than the configured exhaustive-search budget."""


class TooSmall(ValueError):
    """Graph family parameter below the family's minimum."""


class TooLarge(ValueError):
    """Enumeration request beyond the supported size."""


class RetryLimit(RuntimeError):
    """Rejection sampling gave up after the configured number of attempts."""


class InfeasibleInput(ValueError):
    """Input violates the preconditions of a combinatorial selection."""
