"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument fell outside an operation's documented domain."""


class BudgetExceededError(RuntimeError):
    """An explicitly budgeted computation ran out of budget."""


class InternalInconsistencyError(RuntimeError):
    """Two independent routes to the same quantity disagreed.

    Raised only for conditions that indicate a bug in this package,
    never for bad input.
    """
