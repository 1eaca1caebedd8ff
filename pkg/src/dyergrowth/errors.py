"""Exception hierarchy shared by all modules."""


class DyerError(Exception):
    """Base class for domain errors raised by this package."""


class InvalidGraphError(DyerError, ValueError):
    """A Dyer graph, Dyer matrix or word does not satisfy its invariants."""


class BudgetExceeded(DyerError):
    """A state/closure budget was exhausted before the computation finished.

    Raised instead of returning a possibly wrong answer.
    """


class InconsistencyError(DyerError):
    """An internal cross-check failed; indicates a bug, never bad input."""
