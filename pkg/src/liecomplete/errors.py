"""Exception hierarchy.

Input problems (bad shapes, axiom failures, unmet preconditions) derive from
``ValueError``; :class:`InternalInvariantError` signals a bug.
"""


class LieError(ValueError):
    """Base class for user-facing errors; ``witness`` carries evidence when available."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ShapeError(LieError):
    pass


class AxiomError(LieError):
    """A structure-constant table violates antisymmetry or the Jacobi identity."""


class NotAnIdealError(LieError):
    pass


class PreconditionError(LieError):
    pass


class ParseError(LieError):
    def __init__(self, message: str, location: str | None = None, witness=None):
        if location:
            message = f"{location}: {message}"
        super().__init__(message, witness)
        self.location = location


class InternalInvariantError(RuntimeError):
    pass
