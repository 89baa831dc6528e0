"""Exception hierarchy shared by the whole package."""


class FemUpdateError(Exception):
    """Base class for every error raised by femupdate."""


class GeometryError(FemUpdateError):
    """Invalid element geometry or section property (non-positive, NaN, ...)."""


class ModelConfigError(FemUpdateError):
    """Model or experiment definition is inconsistent (bad references, bounds, ...)."""


class DegenerateModelError(FemUpdateError):
    """The assembled system is singular or otherwise unusable (e.g. mass not PD)."""


class DimensionError(FemUpdateError, ValueError):
    """Array shapes or vector dimensions do not agree."""


class CovarianceError(FemUpdateError):
    """A covariance matrix is not symmetric positive definite."""


class NumericalError(FemUpdateError):
    """Eigensolver failure, underflow, or other numerical breakdown."""


class InvalidStateError(FemUpdateError):
    """A sampler was asked to move from a state with non-finite log density."""


class ControlFailureError(FemUpdateError):
    """Population control could not keep the population inside its hard bounds."""


class EstimationError(FemUpdateError):
    """A weighted estimate could not be formed (e.g. zero total weight)."""


class DataError(FemUpdateError):
    """Measured data is invalid (non-positive frequencies, empty report, ...)."""
