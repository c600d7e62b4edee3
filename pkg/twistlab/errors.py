"""
Exception hierarchy for twistlab.

Every error carries the process exit code the CLI reports for it:
2 for bad parameters, 3 for grid and resolution problems, 4 for failed
verification suites.
"""


class TwistlabError(Exception):
    """Base class for all twistlab errors."""

    exit_code = 1


class ParameterError(TwistlabError, ValueError):
    """A parameter lies outside the range an operation accepts."""

    exit_code = 2


class SingularTimeError(ParameterError):
    """Kernel route requested at a time where the kernel is singular (t in πZ)."""


class ConfigError(ParameterError):
    """An environment variable or configuration setting cannot be used."""


class CatalogError(TwistlabError):
    """Basis index beyond the catalog, or a catalog that does not match its key."""

    exit_code = 2


class DataError(TwistlabError, ValueError):
    """Non-finite samples or malformed input data."""

    exit_code = 2


class FieldFormatError(DataError):
    """A TWF1 or TWM1 file could not be parsed."""


class GridError(TwistlabError):
    """Grid mismatch or a grid too coarse/small for the requested operation."""

    exit_code = 3


class BandLimitError(GridError):
    """Samples are not resolved by the lattice (aliasing or wrap-around)."""


class DimensionError(GridError):
    """Operation needs an even ambient dimension (a phase space R^{2d})."""


class MemoryBudgetError(GridError):
    """Materializing an array would exceed the configured memory budget."""


class TruncationError(TwistlabError):
    """Spectral truncation residual is above the caller's tolerance."""

    exit_code = 3

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class VerificationError(TwistlabError):
    """One or more verification checks failed."""

    exit_code = 4
