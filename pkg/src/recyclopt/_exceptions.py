"""Exception hierarchy."""

__all__ = [
    "RecycloptError",
    "ConfigError",
    "ValidationError",
    "SolverError",
    "ConsistencyError",
]


class RecycloptError(Exception):
    """Base class for all package errors."""


class ConfigError(RecycloptError):
    """Malformed or unreadable run configuration."""


class ValidationError(RecycloptError, ValueError):
    """Model or configuration parameters violate an invariant."""


class SolverError(RecycloptError, RuntimeError):
    """The shooting solver could not produce a solution."""


class ConsistencyError(SolverError):
    """Solver internals disagree (e.g., terminal values not monotone in k)."""
