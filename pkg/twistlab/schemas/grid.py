"""
Grid schemas.

A GridSpec describes the uniform centered lattice x_j = (j - N/2) h,
j = 0..N-1, on every axis of R^n, with h = 2R/N.
"""

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..data.defaults import WINDOW_MARGIN
from ..errors import DimensionError, GridError


class GridSpec(BaseModel):
    """Uniform sampling lattice on R^n shared by all axes."""

    model_config = ConfigDict(frozen=True)

    dim: int = Field(..., ge=1, le=4, description="Ambient dimension n")
    points: int = Field(..., ge=2, description="Samples per axis N (even)")
    half_width: float = Field(..., gt=0, description="Window half-width R")

    @field_validator("points")
    @classmethod
    def validate_points(cls, v: int) -> int:
        """Centered lattices need an even sample count."""
        if v % 2:
            raise GridError(f"points per axis must be even, got {v}")
        return v

    @classmethod
    def self_dual(cls, dim: int, points: int, ratio: float = 1.0) -> "GridSpec":
        """
        Grid with h² = 2π·ratio/N.

        ratio=1 gives a grid equal to its own FFT dual. ratio=1/4 is the
        grid on which kernel and Weyl symbol lattices are alias-free.
        """
        h = math.sqrt(2.0 * math.pi * ratio / points)
        return cls(dim=dim, points=points, half_width=points * h / 2.0)

    @classmethod
    def for_hermite(cls, dim: int, points: int, k_max: int) -> "GridSpec":
        """Window R = √(2(2K+n)) + margin around the Hermite turning point."""
        half_width = math.sqrt(2.0 * (2 * k_max + dim)) + WINDOW_MARGIN
        return cls(dim=dim, points=points, half_width=half_width)

    @property
    def spacing(self) -> float:
        """Sample spacing h = 2R/N."""
        return 2.0 * self.half_width / self.points

    @property
    def frequency_spacing(self) -> float:
        """Spacing π/R of the FFT frequency lattice."""
        return math.pi / self.half_width

    @property
    def weight(self) -> float:
        """Quadrature weight h^n of one sample."""
        return self.spacing**self.dim

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.points,) * self.dim

    @property
    def size(self) -> int:
        return self.points**self.dim

    def axis(self) -> np.ndarray:
        """Sample positions along one axis."""
        return (np.arange(self.points) - self.points // 2) * self.spacing

    def coords(self) -> list[np.ndarray]:
        """Open (broadcastable) coordinate arrays, one per axis."""
        return list(np.ix_(*([self.axis()] * self.dim)))

    def radius_squared(self) -> np.ndarray:
        """|x|² on the lattice."""
        return sum(c**2 for c in self.coords())

    def dual(self) -> "GridSpec":
        """FFT dual lattice: same N, half-width π/h."""
        return GridSpec(
            dim=self.dim, points=self.points, half_width=math.pi / self.spacing
        )

    def with_dim(self, dim: int) -> "GridSpec":
        return GridSpec(dim=dim, points=self.points, half_width=self.half_width)

    def half(self) -> "GridSpec":
        """Base grid R^d of a phase-space grid R^{2d}."""
        if self.dim % 2:
            raise DimensionError(f"grid dimension {self.dim} is not even")
        return self.with_dim(self.dim // 2)

    def doubled(self) -> "GridSpec":
        """Phase-space grid R^{2n} over this grid."""
        return self.with_dim(2 * self.dim)

    def is_self_dual(self, rtol: float = 1e-12) -> bool:
        return math.isclose(self.dual().half_width, self.half_width, rel_tol=rtol)

    def same_lattice(self, other: "GridSpec", rtol: float = 1e-12) -> bool:
        """Same dimension, sample count and spacing."""
        return (
            self.dim == other.dim
            and self.points == other.points
            and math.isclose(self.half_width, other.half_width, rel_tol=rtol)
        )

    def describe(self) -> dict:
        return {
            "dim": self.dim,
            "points": self.points,
            "half_width": self.half_width,
            "spacing": self.spacing,
        }
