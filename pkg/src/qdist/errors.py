"""Exception types raised by qdist."""


class QdistError(Exception):
    """Base class for all qdist errors."""


class DomainError(QdistError, ValueError):
    """An argument lies outside the domain of the function."""


class InfeasibleError(QdistError, ValueError):
    """A requested constraint (e.g. a particle number) cannot be met."""


class NoSolutionError(QdistError, ValueError):
    """A defining equation has no admissible solution."""


class ConvergenceError(QdistError, RuntimeError):
    """An iterative procedure did not reach its tolerance."""
