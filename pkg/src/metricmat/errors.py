"""Exception types shared across the package."""


class MatroidError(ValueError):
    """Invalid matroid input or an operation undefined on it."""


class InputError(ValueError):
    """A file or argument does not match one of the accepted schemas."""


class BudgetError(RuntimeError):
    """An exhaustive computation would exceed its configured budget."""

    def __init__(self, message, budget=None, limit=None):
        super().__init__(message)
        self.budget = budget
        self.limit = limit
