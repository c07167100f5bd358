"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the supported domain of an operation."""


class ConvergenceError(RuntimeError):
    """An iterative scheme (root tracker, quadrature) missed its tolerance."""

    def __init__(self, message, **diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics

    def __str__(self):
        base = super().__str__()
        if not self.diagnostics:
            return base
        extra = ", ".join(f"{k}={v!r}" for k, v in self.diagnostics.items())
        return f"{base} ({extra})"


class GridError(ValueError):
    """A verification grid is too coarse to support a log-log fit."""


class BudgetError(ValueError):
    """A truncation error bound exceeds the requested accuracy."""
