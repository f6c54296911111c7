"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class InconsistencyError(RuntimeError):
    """A computed result contradicts a proven structural property.

    Raised instead of returning a silently empty or partial answer, e.g. when
    no sign change of the bisector derivative is found on the search interval.
    """
