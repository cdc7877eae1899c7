"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    pass


class InvalidStateError(ValueError):
    """Raised for non-unit state vectors or invalid density operators."""


class InvalidDistributionError(ValueError):
    pass


class InvalidSignalError(ValueError):
    """Raised for too-short, non-uniform or non-finite sampled signals."""


class ConvergenceError(RuntimeError):
    pass


class FormatError(ValueError):
    """Malformed input file (CSV or PGM)."""
