"""Exception types shared across the laboratory."""


class ParameterError(ValueError):
    """A precondition on operation parameters is violated."""


class CoverageError(ParameterError):
    """A value table does not cover the requested range."""


class BudgetError(RuntimeError):
    """A direct-evaluation budget was exceeded; caller should switch paths."""


class CertificationError(RuntimeError):
    """Branch-and-bound hit its iteration cap before certifying.

    Carries the best bound found so far in ``best_value`` / ``upper_bound``.
    """

    def __init__(self, message, best_value=None, upper_bound=None):
        super().__init__(message)
        self.best_value = best_value
        self.upper_bound = upper_bound


class InconsistencyError(RuntimeError):
    """Data violates a structural uniqueness guarantee (names the collision)."""


class EmptyFitError(RuntimeError):
    """Model fitting was attempted on degenerate input."""
