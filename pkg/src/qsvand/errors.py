"""Exception types shared across the package."""


class InvalidSystemError(ValueError):
    """Generators violate the invariants of their family."""


class InvalidNodesError(ValueError):
    """Nodes are zero, repeated, or not finite."""


class SingularMatrixError(ArithmeticError):
    """Elimination met a (numerically) zero pivot."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class SingularBasisError(ValueError):
    """A basis transformation matrix has a zero diagonal entry."""


class InstanceFormatError(ValueError):
    """An instance or matrix file cannot be parsed."""
