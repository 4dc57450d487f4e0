"""Exception types shared by the numerical modules."""


class DomainError(ValueError):
    """An argument lies outside the domain where a routine is defined."""


class ConvergenceError(RuntimeError):
    """An iterative routine exhausted its budget before meeting tolerance."""
