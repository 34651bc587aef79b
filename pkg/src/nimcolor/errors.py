"""Shared exception types."""


class NotBipartiteError(ValueError):
    """Raised when a bipartition is requested for a graph with an odd cycle."""


class ResourceLimitError(RuntimeError):
    """Raised when an exact computation exceeds its configured size budget."""


class TuranUnavailableError(ValueError):
    """Raised when no Turan value (formula or oracle) is available for a pattern."""
