"""
Special Hermite functions, Laguerre kernels and dilated Gaussians on R^{2d}.

    Φ_{α,β}(z) = A(Φ_α, Φ_β)(Jz)
    Φ_{β,β}(z) = (2π)^{-d/2} ∏_j L_{β_j}(|z_j|²/2) e^{-|z_j|²/4}
    φ_k(z)     = L_k^{d-1}(|z|²/2) e^{-|z|²/4} = (2π)^{d/2} Σ_{|β|=k} Φ_{β,β}(z)
"""

import logging
import math

import numpy as np

from ..data.defaults import SCHWARTZ_SHELL_THRESHOLD
from ..errors import ParameterError
from ..lattice.field import SCHWARTZ, Field
from ..lattice.grid import negate_axes, require_phase_space
from ..lattice.kernel_transform import require_alias_free
from ..phasespace.transforms import ambiguity
from ..schemas.grid import GridSpec
from .hermite import MultiIndex, hermite_nd
from .laguerre import laguerre_table

logger = logging.getLogger(__name__)


def _phase_indices(alpha, beta, d: int) -> tuple[MultiIndex, MultiIndex]:
    alpha = MultiIndex.of(alpha)
    beta = MultiIndex.of(beta)
    if alpha.dim != d or beta.dim != d:
        raise ParameterError(f"indices {alpha}, {beta} do not match d={d}")
    return alpha, beta


def special_hermite(alpha, beta, grid: GridSpec) -> Field:
    """
    Φ_{α,β} on the phase-space lattice.

    The ambiguity transform is evaluated with its frequency lattice equal to
    the position lattice, then J is applied as an exact reindexing
    (x, y) ↦ (y, -x).
    """
    d = require_phase_space(grid)
    alpha, beta = _phase_indices(alpha, beta, d)
    require_alias_free(grid, 1.0)
    base = grid.half()
    A = ambiguity(hermite_nd(alpha, base), hermite_nd(beta, base), frequency=base)
    perm = tuple(range(d, 2 * d)) + tuple(range(d))
    values = negate_axes(np.transpose(A.materialize(), perm), range(d))
    return Field(grid, values, f"Phi_{alpha},{beta}")


def _plane_radii(grid: GridSpec) -> list[np.ndarray]:
    d = require_phase_space(grid)
    coords = grid.coords()
    return [coords[j] ** 2 + coords[d + j] ** 2 for j in range(d)]


def special_hermite_diagonal(beta, grid: GridSpec) -> Field:
    """Closed form of Φ_{β,β} (Laguerre product)."""
    d = require_phase_space(grid)
    beta = MultiIndex.of(beta)
    if beta.dim != d:
        raise ParameterError(f"index {beta} does not match d={d}")
    values = np.ones(grid.shape) * (2.0 * math.pi) ** (-d / 2.0)
    for b, r2 in zip(beta.components, _plane_radii(grid), strict=True):
        values = values * laguerre_table(b, 0.0, r2)[b] * np.exp(-0.25 * r2)
    return Field(grid, values, f"Phi_{beta},{beta}")


def laguerre_kernel(k: int, grid: GridSpec) -> Field:
    """φ_k(z) = L_k^{d-1}(|z|²/2) e^{-|z|²/4}."""
    d = require_phase_space(grid)
    if k < 0:
        raise ParameterError(f"Laguerre kernel order must be ≥ 0, got {k}")
    r2 = grid.radius_squared()
    values = laguerre_table(k, d - 1.0, 0.5 * r2)[k] * np.exp(-0.25 * r2)
    return Field(grid, values, f"phi_{k}")


def gaussian_dilated(lam: float, grid: GridSpec) -> Field:
    """
    g_λ(z) = e^{-λ|z|²}.

    Tagged schwartz-class only when the samples have decayed below the shell
    threshold at the window edge; wide Gaussians stay untagged.
    """
    if not lam > 0:
        raise ParameterError(f"Gaussian dilation must be positive, got {lam}")
    values = np.exp(-lam * grid.radius_squared())
    g = Field(grid, values, f"g_{lam:g}")
    if g.shell_ratio() >= SCHWARTZ_SHELL_THRESHOLD:
        logger.debug(
            "g_%g reaches %.2e of its peak on the boundary shell, left untagged",
            lam,
            g.shell_ratio(),
        )
        return g
    return Field(grid, g.values, g.label, (SCHWARTZ,))
