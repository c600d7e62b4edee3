"""
Differential operators by spectral differentiation.

    H f = -Δf + |x|² f                                   (harmonic oscillator)
    L f = -Δf + ¼|z|² f - i Σ_j (x_j ∂_{y_j} - y_j ∂_{x_j}) f    (on R^{2d})

Inputs must have decayed at the window edge; otherwise the periodic FFT
derivative wraps around and a BandLimitError is raised.
"""

import numpy as np

from ..errors import ParameterError
from ..lattice.field import Field
from ..lattice.fourier import spectral_derivative
from ..lattice.grid import require_phase_space


def laplacian(f: Field) -> np.ndarray:
    return sum(spectral_derivative(f, j, order=2).values for j in range(f.grid.dim))


def apply_hermite_operator(f: Field, scale: float = 1.0) -> Field:
    """-Δf + scale·|x|² f. On R^{2d}, scale = 1/4 gives the operator with
    eigenvalues d + |α| + |β| on Φ_{α,β}."""
    values = -laplacian(f) + scale * f.grid.radius_squared() * f.values
    return f.with_values(values, f"H[{f.label}]")


def apply_twisted_laplacian(f: Field) -> Field:
    d = require_phase_space(f.grid)
    z = f.grid.coords()
    rotation = np.zeros(f.grid.shape, dtype=np.complex128)
    for j in range(d):
        x, y = z[j], z[d + j]
        rotation += x * spectral_derivative(f, d + j).values
        rotation -= y * spectral_derivative(f, j).values
    values = -laplacian(f) + 0.25 * f.grid.radius_squared() * f.values - 1j * rotation
    return f.with_values(values, f"L[{f.label}]")


def _check_axis(f: Field, j: int) -> None:
    if not 0 <= j < f.grid.dim:
        raise ParameterError(f"axis {j} out of range for dim {f.grid.dim}")


def ladder_raise(f: Field, j: int) -> Field:
    """(-∂_{x_j} + x_j) f; maps h_n to √(2(n+1)) h_{n+1}."""
    _check_axis(f, j)
    values = -spectral_derivative(f, j).values + f.grid.coords()[j] * f.values
    return f.with_values(values, f"A{j}+[{f.label}]")


def ladder_lower(f: Field, j: int) -> Field:
    """(∂_{x_j} + x_j) f, the adjoint of ladder_raise."""
    _check_axis(f, j)
    values = spectral_derivative(f, j).values + f.grid.coords()[j] * f.values
    return f.with_values(values, f"A{j}-[{f.label}]")
