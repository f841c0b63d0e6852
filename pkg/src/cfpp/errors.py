"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument lies outside the documented domain of an operation."""


class NonConvergenceError(ArithmeticError):
    """A series or iteration hit its term budget before the stopping rule fired."""


class DegenerateFitError(RuntimeError):
    """A tail-exponent fit was requested on a curve that vanishes on the grid."""
