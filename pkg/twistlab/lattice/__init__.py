"""
Lattice module: grids, sampled fields, quadrature and Fourier transforms.
"""

from .field import (
    SCHWARTZ,
    Field,
    inner,
    modulate,
    quadrature_lp_norm,
    relative_error,
    tensor,
    time_frequency_shift,
    translate,
)
from .fourier import (
    fourier,
    inverse_fourier,
    partial_fourier_first_block,
    spectral_derivative,
    symplectic_fourier,
    symplectic_grid,
)
from .grid import GridSpec, SymplecticForm, negate_axes, require_phase_space
from .io import load_field, save_field

__all__ = [
    "SCHWARTZ",
    "Field",
    "GridSpec",
    "SymplecticForm",
    "fourier",
    "inner",
    "inverse_fourier",
    "load_field",
    "modulate",
    "negate_axes",
    "partial_fourier_first_block",
    "quadrature_lp_norm",
    "relative_error",
    "require_phase_space",
    "save_field",
    "spectral_derivative",
    "symplectic_fourier",
    "symplectic_grid",
    "tensor",
    "time_frequency_shift",
    "translate",
]
