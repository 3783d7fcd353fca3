"""Exception types shared across the package."""


class InstanceFormatError(ValueError):
    """Raised when an instance file or arrival event breaks the format rules."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PromiseViolation(Exception):
    """The input broke a guarantee the algorithm relies on (usually odd girth).

    Colorers raise this instead of ever emitting an improper color.
    """

    def __init__(self, reason, vertex=None, neighbor=None):
        super().__init__(reason)
        self.reason = reason
        self.vertex = vertex
        self.neighbor = neighbor

    def to_dict(self):
        return {
            "vertex": self.vertex,
            "conflicting_neighbor": self.neighbor,
            "reason": self.reason,
        }


class BudgetViolation(PromiseViolation):
    """More bases were added to a subroutine than its budget allows."""
