"""Exception types shared across the package."""


class HypothesisError(ValueError):
    """An operation was invoked outside the hypotheses that make it valid."""


class InternalCheckError(RuntimeError):
    """An internal cross-check failed; signals a bug, not bad input."""
