"""Exception types shared by the number-theory, solver and bench layers."""


class DlogError(Exception):
    """Base class for every error raised by dlogkit."""


class InvalidArgument(DlogError, ValueError):
    """An argument violates an operation's precondition."""


class BudgetExceeded(DlogError):
    """A candidate, round or restart cap was reached before a result."""


class GeneralityFailure(DlogError):
    """Some factor-base prime has no logarithm to the given base."""

    def __init__(self, message: str, missing=()):
        super().__init__(message)
        self.missing = tuple(missing)

    def __reduce__(self):
        return (self.__class__, (self.args[0], self.missing))


class NoSolution(DlogError):
    """The target is not in the subgroup generated by the base."""


class InconsistentState(DlogError):
    """An internal invariant was violated."""
