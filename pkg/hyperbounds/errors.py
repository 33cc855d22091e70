"""Exceptions raised by hyperbounds."""

from __future__ import annotations

from .const import EXIT_CLAIM_FAILURE, EXIT_CONFIG, EXIT_RESOURCE


class HyperboundsError(Exception):
    """Base exception for hyperbounds errors."""

    exit_code: int = EXIT_CLAIM_FAILURE

    def __init__(self, message: str, error_code: str | None = None) -> None:
        """Initialize the error.

        Args:
            message: Error message
            error_code: Optional short machine-readable code

        """
        super().__init__(message)
        self.error_code = error_code


class DomainError(HyperboundsError, ValueError):
    """Input outside the domain where an operation is defined."""


class PoleError(DomainError):
    """A denominator vanishes at the evaluation point."""


class OutOfBoxError(HyperboundsError, KeyError):
    """Coefficient index lies outside the truncation box."""

    def __str__(self) -> str:
        """Return the plain message instead of KeyError's repr."""
        return str(self.args[0]) if self.args else ""


class ResourceLimitError(HyperboundsError):
    """Required coefficient box exceeds the configured budget."""

    exit_code = EXIT_RESOURCE

    def __init__(self, message: str, required: int, budget: int) -> None:
        """Initialize the error with the offending sizes."""
        super().__init__(message, error_code="budget")
        self.required = required
        self.budget = budget

    def __reduce__(self) -> tuple[type[ResourceLimitError], tuple[str, int, int]]:
        """Rebuild with the sizes when crossing a process boundary."""
        return (type(self), (str(self), self.required, self.budget))


class ConfigError(HyperboundsError):
    """Run configuration failed validation."""

    exit_code = EXIT_CONFIG


class CacheCorruptError(HyperboundsError):
    """Cache entry failed its checksum or could not be parsed."""


class VerificationError(HyperboundsError):
    """Two independent computations of the same quantity disagree."""
