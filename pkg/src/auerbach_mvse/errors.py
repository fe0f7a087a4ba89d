"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operand shapes do not fit the operation."""


class SingularMatrixError(ValueError):
    """A matrix that must be invertible is singular."""


class DegeneratePolytopeError(ValueError):
    """A polytope is not full-dimensional, or a region is unbounded."""


class CapacityError(RuntimeError):
    """An enumeration or elimination would exceed its configured cap."""

    def __init__(self, message: str, count: int | None = None):
        super().__init__(message)
        self.count = count


class InvalidWitnessError(ValueError):
    """A witness does not belong to the space it is used with."""


class InputError(ValueError):
    """Malformed user input (space files, rational strings, CLI arguments)."""
