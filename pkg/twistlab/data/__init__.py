"""
Data module - static defaults with no numerical logic.
"""

from .defaults import (
    CACHE_DIR_ENV,
    DIMENSION_DEFAULTS,
    MEMORY_BUDGET_BYTES,
    QUADRATURE_DEFAULTS,
    SCHWARTZ_SHELL_THRESHOLD,
    THREADS_ENV,
    TOLERANCES,
    WINDOW_MARGIN,
    get_dimension_defaults,
)

__all__ = [
    "CACHE_DIR_ENV",
    "DIMENSION_DEFAULTS",
    "MEMORY_BUDGET_BYTES",
    "QUADRATURE_DEFAULTS",
    "SCHWARTZ_SHELL_THRESHOLD",
    "THREADS_ENV",
    "TOLERANCES",
    "WINDOW_MARGIN",
    "get_dimension_defaults",
]
