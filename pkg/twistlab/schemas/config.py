"""
Run configuration schema.

Resolves command settings with precedence flags > JSON config file > defaults.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field

from ..data.defaults import (
    MEMORY_BUDGET_BYTES,
    THREADS_ENV,
    TOLERANCES,
    get_dimension_defaults,
)
from ..errors import ConfigError
from .grid import GridSpec

logger = logging.getLogger(__name__)


class RunConfig(BaseModel):
    """Settings shared by every CLI subcommand."""

    dim: int = Field(1, ge=1, le=2, description="Base dimension d (phase space R^{2d})")
    points: int | None = Field(None, ge=4, description="Samples per axis N")
    half_width: float | None = Field(
        None, gt=0, description="Window half-width R (None: self-dual grid)"
    )
    k_max: int | None = Field(None, ge=0, description="Largest Hermite order K")
    truncation: int | None = Field(None, ge=0, description="Spectral truncation")
    tolerances: dict[str, float] = Field(default_factory=dict)
    output_dir: Path = Field(Path("."), description="Where outputs are written")
    threads: int | None = Field(None, ge=1, description="Thread pool cap")
    memory_budget: int = Field(MEMORY_BUDGET_BYTES, gt=0)

    @classmethod
    def from_sources(
        cls, flags: dict[str, Any] | None = None, config_path: Path | None = None
    ) -> "RunConfig":
        """
        Merge defaults, a JSON config file and explicit flags.

        Flags whose value is None are treated as not given.
        """
        merged: dict[str, Any] = {}
        if config_path is not None:
            try:
                merged.update(json.loads(Path(config_path).read_text()))
            except (OSError, json.JSONDecodeError) as e:
                raise ConfigError(f"cannot read config {config_path}: {e}") from e
            logger.debug(f"Loaded config file {config_path}: {sorted(merged)}")
        for key, value in (flags or {}).items():
            if value is not None and key in cls.model_fields:
                merged[key] = value
        return cls(**merged)

    @property
    def resolved_points(self) -> int:
        if self.points is not None:
            return self.points
        return get_dimension_defaults(self.dim)["points"]

    @property
    def resolved_k_max(self) -> int:
        if self.k_max is not None:
            return self.k_max
        return get_dimension_defaults(self.dim)["k_max"]

    @property
    def resolved_truncation(self) -> int:
        if self.truncation is not None:
            return self.truncation
        return get_dimension_defaults(self.dim)["truncation"]

    @property
    def resolved_threads(self) -> int | None:
        if self.threads is not None:
            return self.threads
        env = os.environ.get(THREADS_ENV)
        return int(env) if env else None

    def tolerance(self, name: str) -> float:
        return self.tolerances.get(name, TOLERANCES[name])  # type: ignore[literal-required]

    def phase_grid(self) -> GridSpec:
        """Grid on R^{2d}."""
        return self._grid(2 * self.dim)

    def base_grid(self) -> GridSpec:
        """Grid on R^d with the same lattice as the phase-space grid."""
        return self._grid(self.dim)

    def _grid(self, dim: int) -> GridSpec:
        points = self.resolved_points
        if self.half_width is None:
            return GridSpec.self_dual(dim, points)
        return GridSpec(dim=dim, points=points, half_width=self.half_width)
