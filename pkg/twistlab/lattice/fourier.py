"""
Fourier transforms on centered lattices.

Conventions:
    F f(ξ)     = (2π)^{-n/2} ∫ e^{-iξ·x} f(x) dx
    F_σ f(ζ)   = π^{-d} ∫ e^{-2iσ(ζ,z)} f(z) dz = 2^d F f(2Jζ)

On the natural dual lattice (n, N, π/h) the rectangle rule for F is a
shifted DFT, computed as fftshift(fftn(ifftshift(f))) scaled by h^n (2π)^{-n/2}.
Any other target lattice goes through the chirp-z transform.
"""

import logging
import math

import numpy as np

from ..data.defaults import DERIVATIVE_SHELL_THRESHOLD
from ..errors import BandLimitError, GridError
from ..schemas.grid import GridSpec
from .czt import centered_sum_axes
from .field import Field
from .grid import negate_axes, require_phase_space

logger = logging.getLogger(__name__)


def _check_band_limit(grid: GridSpec, band_limit: float | None) -> None:
    if band_limit is None:
        return
    nyquist = math.pi / grid.spacing
    if band_limit > nyquist:
        raise BandLimitError(
            f"Nyquist frequency {nyquist:.4g} is below the band limit {band_limit:.4g}; "
            "refine the grid"
        )


def _check_target(source: GridSpec, target: GridSpec) -> None:
    if target.dim != source.dim:
        raise GridError(f"target grid has dim {target.dim}, source has {source.dim}")


def fourier(
    f: Field, band_limit: float | None = None, target: GridSpec | None = None
) -> Field:
    """Continuum-normalized Fourier transform of f."""
    grid = f.grid
    _check_band_limit(grid, band_limit)
    n = grid.dim
    scale = grid.weight * (2.0 * math.pi) ** (-n / 2.0)
    axes = tuple(range(n))
    if target is None:
        values = np.fft.fftshift(
            np.fft.fftn(np.fft.ifftshift(f.values, axes=axes), axes=axes), axes=axes
        )
        return Field(grid.dual(), values * scale, f"F[{f.label}]")

    _check_target(grid, target)
    values = centered_sum_axes(
        f.values,
        omega=grid.spacing * target.spacing,
        in_start=-grid.points // 2,
        out_start=-target.points // 2,
        out_len=target.points,
        axes=axes,
    )
    return Field(target, values * scale, f"F[{f.label}]")


def inverse_fourier(F: Field, target: GridSpec | None = None) -> Field:
    """(2π)^{-n/2} ∫ e^{iξ·x} F(ξ) dξ, on the dual lattice unless target is given."""
    grid = F.grid
    n = grid.dim
    scale = grid.weight * (2.0 * math.pi) ** (-n / 2.0)
    axes = tuple(range(n))
    if target is None:
        values = np.fft.fftshift(
            np.fft.ifftn(np.fft.ifftshift(F.values, axes=axes), axes=axes), axes=axes
        )
        return Field(grid.dual(), values * (grid.size * scale), f"F^-1[{F.label}]")

    _check_target(grid, target)
    values = centered_sum_axes(
        F.values,
        omega=-grid.spacing * target.spacing,
        in_start=-grid.points // 2,
        out_start=-target.points // 2,
        out_len=target.points,
        axes=axes,
    )
    return Field(target, values * scale, f"F^-1[{F.label}]")


def symplectic_grid(grid: GridSpec) -> GridSpec:
    """Natural lattice of F_σ f: spacing π/(N h), half the FFT dual spacing."""
    return GridSpec(
        dim=grid.dim, points=grid.points, half_width=math.pi / (2.0 * grid.spacing)
    )


def symplectic_fourier(f: Field, target: GridSpec | None = None) -> Field:
    """
    Symplectic Fourier transform F_σ f(ζ) = 2^d F f(2Jζ).

    On the natural lattice, 2J maps ζ-samples onto the FFT dual lattice
    exactly: the result is the FFT with its two blocks swapped and the new
    first block negated. Applying it twice returns f on the original lattice.
    """
    d = require_phase_space(f.grid)
    n = 2 * d
    perm = tuple(range(d, n)) + tuple(range(d))
    if target is None:
        spectrum = fourier(f).values
        swapped = np.transpose(spectrum, perm)
        values = (2.0**d) * negate_axes(swapped, range(d))
        return Field(symplectic_grid(f.grid), values, f"Fσ[{f.label}]")

    _check_target(f.grid, target)
    h = f.grid.spacing
    omega = 2.0 * h * target.spacing
    common = dict(
        in_start=-f.grid.points // 2,
        out_start=-target.points // 2,
        out_len=target.points,
    )
    # z_a pairs with ζ_b through e^{-2iζ_b·z_a}; z_b with ζ_a through e^{+2iζ_a·z_b}
    values = centered_sum_axes(f.values, omega=omega, axes=range(d), **common)
    values = centered_sum_axes(values, omega=-omega, axes=range(d, n), **common)
    values = np.transpose(values, perm) * (math.pi ** (-d) * h**n)
    return Field(target, values, f"Fσ[{f.label}]")


def partial_fourier_first_block(f: Field, inverse: bool = False) -> Field:
    """
    Fourier transform in the first d variables of f on R^{2d}.

    The result lives on the same lattice as f: exact FFT when the grid is
    self-dual, chirp-z otherwise.
    """
    d = require_phase_space(f.grid)
    grid = f.grid
    axes = tuple(range(d))
    scale = grid.spacing**d * (2.0 * math.pi) ** (-d / 2.0)
    if grid.is_self_dual():
        shifted = np.fft.ifftshift(f.values, axes=axes)
        if inverse:
            transformed = np.fft.ifftn(shifted, axes=axes) * grid.points**d
        else:
            transformed = np.fft.fftn(shifted, axes=axes)
        values = np.fft.fftshift(transformed, axes=axes) * scale
    else:
        logger.debug("partial Fourier on a non-self-dual grid: chirp-z route")
        sign = -1.0 if inverse else 1.0
        values = scale * centered_sum_axes(
            f.values,
            omega=sign * grid.spacing**2,
            in_start=-grid.points // 2,
            out_start=-grid.points // 2,
            out_len=grid.points,
            axes=axes,
        )
    tag = "F1^-1" if inverse else "F1"
    return Field(grid, values, f"{tag}[{f.label}]")


def spectral_derivative(f: Field, axis: int, order: int = 1) -> Field:
    """
    ∂^order f along one axis by FFT, exact for band-limited periodic samples.

    Fields that have not decayed at the window edge would wrap around, so a
    boundary shell above DERIVATIVE_SHELL_THRESHOLD is a BandLimitError.
    """
    ratio = f.shell_ratio()
    if ratio > DERIVATIVE_SHELL_THRESHOLD:
        raise BandLimitError(
            f"field '{f.label}' reaches {ratio:.1e} of its maximum on the window "
            "edge; spectral differentiation would wrap around. Enlarge the window"
        )
    grid = f.grid
    N = grid.points
    k = 2.0 * math.pi * np.fft.fftfreq(N, d=grid.spacing)
    if order % 2:
        k[N // 2] = 0.0
    shape = [1] * grid.dim
    shape[axis] = N
    multiplier = ((1j * k) ** order).reshape(shape)
    spectrum = np.fft.fft(np.fft.ifftshift(f.values, axes=axis), axis=axis)
    values = np.fft.fftshift(np.fft.ifft(spectrum * multiplier, axis=axis), axes=axis)
    return f.with_values(values)
