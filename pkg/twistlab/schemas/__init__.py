"""
Schema package.

Validated models for grids, norms, flows, configuration and validation results.
"""

from .config import RunConfig
from .flows import FlowParams
from .grid import GridSpec
from .norms import (
    HeatIndexConstants,
    IndexTuple,
    MixedNormSpec,
    conjugate_reciprocal,
    reciprocal,
)
from .validation import ValidationResult

__all__ = [
    "FlowParams",
    "GridSpec",
    "HeatIndexConstants",
    "IndexTuple",
    "MixedNormSpec",
    "RunConfig",
    "ValidationResult",
    "conjugate_reciprocal",
    "reciprocal",
]
