"""Shared exception types."""


class SizeGuardError(ValueError):
    """Input exceeds the size bound of an exponential- or high-degree-cost routine.

    Raised instead of silently running an unbounded computation; the message
    names the routine and its bound.
    """
