"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """An enumeration hit its configured work budget before finishing."""


class UnsatisfiedConstraintError(ValueError):
    """A configuration does not satisfy the constraints it claims."""
