"""Exception hierarchy.  The CLI maps each family to an exit status."""


class CoxeterError(Exception):
    """Base class for every error raised by the engine."""


class ParseError(CoxeterError, ValueError):
    """Malformed Coxeter-matrix file or word."""

    def __init__(self, message, row=None, col=None):
        where = ""
        if row is not None:
            where = f" (row {row}" + (f", column {col})" if col is not None else ")")
        super().__init__(message + where)
        self.row = row
        self.col = col


class DomainError(CoxeterError, ValueError):
    """An operation was called outside its precondition."""


class CapExceeded(CoxeterError, RuntimeError):
    """A closure or enumeration grew past its configured cap."""


class InvariantViolation(CoxeterError, AssertionError):
    """Internal consistency check failed (e.g. two routes disagree)."""
