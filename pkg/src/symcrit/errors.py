"""Exception types shared across the package."""

__all__ = ["PreconditionError", "ConvergenceError"]


class PreconditionError(ValueError):
    """A documented hypothesis of an operation does not hold for the input."""


class ConvergenceError(RuntimeError):
    """An iterative routine exhausted its budget without meeting tolerance.

    The least-bad iterate seen so far, if any, is attached as ``best``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
