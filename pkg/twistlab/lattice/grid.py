"""
Lattice geometry: the symplectic form and exact lattice automorphisms.
"""

import numpy as np

from ..errors import DimensionError
from ..schemas.grid import GridSpec

__all__ = ["GridSpec", "SymplecticForm", "negate_axes", "require_phase_space"]


class SymplecticForm:
    """
    Standard symplectic form on R^{2d}: σ(z, w) = Jz·w with J = [[0, I], [-I, 0]].
    """

    def __init__(self, d: int):
        if d < 1:
            raise DimensionError(f"symplectic dimension must be positive, got {d}")
        self.d = d
        eye = np.eye(d)
        zero = np.zeros((d, d))
        self.matrix = np.block([[zero, eye], [-eye, zero]])

    def apply(self, z: np.ndarray) -> np.ndarray:
        """Jz for z of shape (..., 2d)."""
        z = np.asarray(z)
        return z @ self.matrix.T

    def sigma(self, z: np.ndarray, w: np.ndarray) -> np.ndarray:
        """σ(z, w) = Jz·w, broadcasting over leading axes."""
        return np.sum(self.apply(z) * np.asarray(w), axis=-1)

    def on_grid(self, z_coords: list[np.ndarray], w: np.ndarray) -> np.ndarray:
        """σ(z, w) for open lattice coordinates z and a fixed point w."""
        d = self.d
        x, y = z_coords[:d], z_coords[d:]
        return sum(y[j] * w[j] - x[j] * w[d + j] for j in range(d))


def require_phase_space(grid: GridSpec) -> int:
    """Return d for a grid on R^{2d}; odd ambient dimension is an error."""
    if grid.dim % 2:
        raise DimensionError(
            f"operation needs an even ambient dimension, got n={grid.dim}"
        )
    return grid.dim // 2


def negate_axes(values: np.ndarray, axes) -> np.ndarray:
    """
    Index map j ↦ N - j (mod N) on the given axes.

    On a centered lattice this is x ↦ -x, with the unpaired sample -R
    mapped to itself. It is an exact involution.
    """
    out = values
    for ax in axes:
        out = np.roll(np.flip(out, axis=ax), 1, axis=ax)
    return out
