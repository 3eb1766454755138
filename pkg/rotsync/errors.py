"""Exception hierarchy shared by all rotsync modules."""


class RotSyncError(Exception):
    """Base class for all rotsync errors."""

    pass


class ConfigurationError(RotSyncError, ValueError):
    """Raised when a configuration value or file is invalid."""

    pass


class ArgumentError(RotSyncError, ValueError):
    """Raised when an operation receives inconsistent arguments."""

    pass


class StreamError(RotSyncError):
    """Raised when streamed samples arrive out of order."""

    pass


class SimulationError(RotSyncError):
    """Raised when a simulation request cannot be realized."""

    pass


class NumericalError(RotSyncError):
    """Raised when a numerical operation fails (e.g. a singular matrix)."""

    pass
