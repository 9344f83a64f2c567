"""Exception types shared across the package."""


class PairbosonError(Exception):
    """Base class for all package-specific errors."""


class UnstableExpansionPoint(PairbosonError):
    """Quadratic expansion around a point where the fluctuation Hamiltonian is unbounded."""


class NoConvergence(PairbosonError):
    """An iterative procedure exhausted its budget without meeting tolerance."""


class TruncationOverflow(PairbosonError):
    """A requested truncation exceeds the configured hard cap."""


class EmptySubspace(PairbosonError):
    """Canonical orthogonalization filtered out every overlap-matrix direction."""


class InsufficientPoints(PairbosonError):
    """Too few data points for the requested fit."""


class NonPositiveValue(PairbosonError):
    """Log-log fitting requires strictly positive values."""


class ExcessiveDivergence(PairbosonError):
    """Too many stochastic trajectories escaped the divergence cap."""


class DomainError(PairbosonError):
    """Operation evaluated outside its physical domain of validity."""
