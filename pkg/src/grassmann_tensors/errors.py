"""Exception types raised by the library."""


class GrassmannError(Exception):
    """Base class for all library errors."""


class DimensionError(GrassmannError, ValueError):
    """Operand shapes or mode assignments do not agree."""


class ArgumentError(GrassmannError, ValueError):
    """An argument is outside the operation's domain."""


class ValidationError(GrassmannError, ValueError):
    """A tensor fails a structural check (e.g. antisymmetry)."""


class DegenerateConfigurationError(GrassmannError, ValueError):
    """Geometric input is not in general position (dependent points/planes)."""


class ResourceError(GrassmannError, MemoryError):
    """The requested tensor would exceed the configured size limits."""
