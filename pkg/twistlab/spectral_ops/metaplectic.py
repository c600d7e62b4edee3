"""
The metaplectic intertwiner A_J and the Landau symplectic matrix.

    A_J f(x, y) = (2π)^{-d/2} ∫ e^{ix·u} f(u + y/2, u - y/2) du

A_J is unitary on L²(R^{2d}), maps Φ_α ⊗ Φ_β to Φ_{α,β} and intertwines
L with the partial oscillator I ⊗ H: L A_J = A_J (I ⊗ H). Up to the constant
(2π)^{d/2} it is the inverse chirped kernel transform with β = 1, so it
reuses the lattice machinery of the twisted convolution.
"""

import logging
import math
from typing import Literal

import numpy as np
from scipy.linalg import expm

from ..errors import ParameterError
from ..lattice.field import Field
from ..lattice.grid import SymplecticForm, require_phase_space
from ..lattice.kernel_transform import diagonal_fourier, function_to_kernel

logger = logging.getLogger(__name__)


def metaplectic_AJ(f: Field, adjoint: bool = False) -> Field:
    """A_J f, or A_J* f with adjoint=True. Needs N ≥ 2R²/π."""
    d = require_phase_space(f.grid)
    norm = (2.0 * math.pi) ** (-d / 2.0)
    if adjoint:
        # A_J* F(a, b) = (2π)^{-d/2} ∫ e^{-ix·(a+b)/2} F(x, a-b) dx
        kernel = function_to_kernel(f, 1.0)
        return Field(f.grid, kernel.values * norm, f"AJ*[{f.label}]")
    base = f.grid.half()
    values = diagonal_fourier(f.values, base, scale=base.spacing)
    return Field(f.grid, values * norm, f"AJ[{f.label}]")


# =============================================================================
# Landau symplectic matrix
# =============================================================================


def landau_matrix(d: int = 1) -> np.ndarray:
    """Hamiltonian matrix 𝐋 = [[-J/2, I], [-I/4, -J/2]] of L on R^{4d}."""
    if d < 1:
        raise ParameterError(f"d must be ≥ 1, got {d}")
    J = SymplecticForm(d).matrix
    eye = np.eye(2 * d)
    return np.block([[-0.5 * J, eye], [-0.25 * eye, -0.5 * J]])


def landau_symplectic_matrix(
    t: float, d: int = 1, method: Literal["closed", "expm"] = "closed"
) -> tuple[np.ndarray, np.ndarray]:
    """
    L_t = e^{-2t𝐋} and its singular values (descending).

    𝐋³ = -𝐋, so the exponential series collapses to
    I - sin(2t)𝐋 + (1 - cos 2t)𝐋².
    """
    L = landau_matrix(d)
    if method == "closed":
        Lt = np.eye(4 * d) - math.sin(2.0 * t) * L + (1.0 - math.cos(2.0 * t)) * (L @ L)
    elif method == "expm":
        Lt = expm(-2.0 * t * L)
    else:
        raise ParameterError(f"unknown method '{method}' (expected closed or expm)")
    singular = np.linalg.svd(Lt, compute_uv=False)
    logger.debug(f"L_t at t={t}: singular values {singular.min():.6g}..{singular.max():.6g}")
    return Lt, singular
