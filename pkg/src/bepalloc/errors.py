"""Semantic exceptions shared across the package."""


class BepAllocError(Exception):
    """Base class for all package-specific errors."""


class DomainError(BepAllocError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class DegenerateRatesError(BepAllocError):
    """Exponential rates too close for a closed form; caller should fall
    back to Monte Carlo instead of trusting a cancelled difference."""


class NoNullSpaceError(DomainError):
    """Artificial-noise beamforming requested with a single antenna."""


class CodeDesignError(BepAllocError, ValueError):
    """Block-code targets admit no valid raw-BEP threshold pair."""


class ConfigError(BepAllocError, ValueError):
    """Experiment configuration is malformed or violates a precondition."""
