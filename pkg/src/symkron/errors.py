"""Shared exception types."""


class DegreeMismatchError(ValueError):
    """Operands live in different graded components."""


class BudgetExceededError(RuntimeError):
    """A brute-force computation would exceed the configured size cap."""


class InternalConsistencyError(RuntimeError):
    """An exact identity that must hold by theory failed at runtime."""


class ExpressionError(ValueError):
    """Syntax or validation error in an expression, with a 1-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"position {position}: {message}")
        self.position = position
