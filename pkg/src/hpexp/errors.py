"""Exception types shared across the package."""


class HPError(Exception):
    """Base class for all package errors."""


class RankDeficient(HPError):
    """The integer system does not have a one-dimensional nullspace."""

    def __init__(self, rank, columns):
        super().__init__(f"nullspace dimension {columns - rank} (rank {rank}, {columns} columns)")
        self.rank = rank
        self.columns = columns


class DegenerateNormalization(HPError):
    """The polynomial requested to be monic has deficient degree."""


class NoConvergence(HPError):
    """Iterative root finding stopped at its sweep cap."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ToleranceNotMet(HPError):
    """Adaptive quadrature hit its subdivision depth cap."""


class IdentityFailed(HPError):
    """An exact polynomial identity does not hold."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NearBranchPoint(HPError):
    """Point too close to a branch point for the sheets to be separated."""


class OriginDegenerate(HPError):
    """The cubic loses a root at z = 0."""


class TraceDiverged(HPError):
    """Trajectory tracer failed to converge or ran past its node cap."""


class LabelAmbiguous(HPError):
    """Traced trajectories could not be classified."""


class OnCut(HPError):
    """Point lies on a branch cut within tolerance."""


class OnSupport(HPError):
    """Point lies on the support of the measure."""


class OutOfDisk(HPError):
    """Point outside the disk where a local expansion is defined."""


class WrongRegion(HPError):
    """Asymptotic formula requested outside its region of validity."""

    def __init__(self, message, region=None):
        super().__init__(message)
        self.region = region


class NegativeDensity(HPError):
    """Measure density negative for both curve orientations."""


class PathBlocked(HPError):
    """No admissible integration path was found."""
