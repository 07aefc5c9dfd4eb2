"""Exception types shared across the package."""


class BackendError(TypeError):
    """Values from incompatible scalar backends were mixed."""


class DimensionError(ValueError):
    """Vector or operator dimensions do not agree."""


class ConstraintError(ValueError):
    """An input violates the side conditions of an identity or inequality."""


class InfeasibleConstraints(ConstraintError):
    """The sampler could not satisfy a constraint set within its attempt budget."""


class NonFiniteComparison(ValueError):
    def __init__(self, msg="non-finite comparison"):
        super().__init__(msg)
