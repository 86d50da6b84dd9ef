"""Exception types shared across the library."""


class HyperballError(Exception):
    """Base class for every error raised by this library."""


class InvalidInputError(HyperballError, ValueError):
    """An argument fails basic validation (zero vector, non-finite value, bad shape)."""


class DomainError(HyperballError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class NotTruncatableError(DomainError):
    """The principal vertex is not an outer point, so no polar truncation exists."""


class DegenerateTriangleError(DomainError):
    """Triangle sides too short to carry reliable angle information."""


class SingularMatrixError(HyperballError, ValueError):
    """Determinant too close to zero to invert.  Carries the offending value."""

    def __init__(self, message: str, det: float):
        super().__init__(message)
        self.det = det


class ConvergenceError(HyperballError, RuntimeError):
    """An iterative routine exhausted its budget.  Carries the last bracket."""

    def __init__(self, message: str, bracket=None):
        super().__init__(message)
        self.bracket = bracket
