"""Custom exceptions for cosbound."""


class CosboundException(Exception):
    """Base exception for all cosbound errors."""

    pass


class DomainError(CosboundException, ValueError):
    """Raised when an operation is called outside its mathematical domain."""

    pass


class NotConverged(CosboundException):
    """Raised when an iterative kernel exhausts its budget."""

    def __init__(self, message: str, best=None):
        """
        Initialize with the best iterate reached.

        Args:
            message: Human readable reason
            best: Best iterate (or result object) found before giving up
        """
        super().__init__(message)
        self.best = best


class MaxDepthExceeded(CosboundException):
    """Raised when adaptive quadrature exceeds its recursion limit."""

    pass


class AllStartsFailed(CosboundException):
    """Raised when no start vector of a subproblem converges."""

    pass


class Infeasible(CosboundException):
    """Raised when no KKT subproblem yields a feasible converged outcome."""

    pass


class NoRestriction(CosboundException):
    """Raised when no bound line shrinks the admissible a-interval."""

    def __init__(self, message: str, interval: tuple[float, float]):
        """
        Initialize with the fallback interval.

        Args:
            message: Human readable reason
            interval: The unrestricted interval (1 + eps, fejer_bound(n))
        """
        super().__init__(message)
        self.interval = interval


class CertificationFailed(CosboundException):
    """Raised when a final witness fails certification or membership."""

    pass


class NoFeasibleSample(CosboundException):
    """Raised when oracle sampling finds no feasible point."""

    pass


class ConfigError(CosboundException):
    """Raised when a config file or flag value cannot be used."""

    pass
