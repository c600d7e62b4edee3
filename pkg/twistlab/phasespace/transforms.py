"""
Time-frequency transforms on lattices.

    V_g f(x, ξ)  = (2π)^{-n/2} ∫ f(y) conj(g(y - x)) e^{-iξ·y} dy
    𝒱_g f(z, ζ)  = 2^d V_g f(z, 2Jζ)                          (f on R^{2d})
    A(f, g)(x,ξ) = (2π)^{-n/2} ∫ e^{-iξ·y} f(y + x/2) conj(g(y - x/2)) dy
                 = e^{ix·ξ/2} V_g f(x, ξ)
    W(f, g)(x,ξ) = (2π)^{-n/2} ∫ e^{-iξ·y} f(x + y/2) conj(g(x - y/2)) dy

Translations are whole-sample shifts with zero fill. The half-sample shift
in the ambiguity transform becomes the phase e^{ix·ξ/2}; the Wigner
transform substitutes y = 2v, which keeps every sample on the lattice but
only resolves |ξ| < π/(2h).
"""

import logging
import math

import numpy as np

from ..data.defaults import MEMORY_BUDGET_BYTES
from ..errors import BandLimitError, GridError, ParameterError
from ..lattice.czt import centered_sum_axes
from ..lattice.field import Field, translate
from ..lattice.fourier import fourier, symplectic_grid
from ..lattice.grid import negate_axes, require_phase_space
from ..schemas.grid import GridSpec
from .field import PhaseSpaceField

logger = logging.getLogger(__name__)

WIGNER_SPECTRAL_FLOOR = 1e-10


def _check_pair(f: Field, g: Field) -> None:
    f.require_same_grid(g)
    if not np.any(g.values):
        raise ParameterError("window is identically zero")


def _spectrum(values: np.ndarray, grid: GridSpec, frequency: GridSpec | None) -> np.ndarray:
    """Continuum Fourier transform of raw samples onto the frequency lattice."""
    return fourier(Field(grid, values), target=frequency).values


def gabor_transform(
    f: Field,
    g: Field,
    frequency: GridSpec | None = None,
    memory_budget: int = MEMORY_BUDGET_BYTES,
) -> PhaseSpaceField:
    """
    V_g f, one Fourier transform per lattice translate of the window.

    The frequency lattice defaults to the FFT dual of f's grid.
    """
    _check_pair(f, g)
    grid = f.grid
    freq = frequency if frequency is not None else grid.dual()
    target = frequency
    half = grid.points // 2

    def slice_at(idx: tuple[int, ...]) -> np.ndarray:
        shifted = translate(g, tuple(i - half for i in idx))
        return _spectrum(f.values * np.conj(shifted.values), grid, target)

    return PhaseSpaceField(grid, freq, slice_at, f"V[{f.label},{g.label}]", memory_budget)


def _position_vector(grid: GridSpec, idx: tuple[int, ...]) -> np.ndarray:
    return (np.asarray(idx) - grid.points // 2) * grid.spacing


def ambiguity(
    f: Field,
    g: Field,
    frequency: GridSpec | None = None,
    memory_budget: int = MEMORY_BUDGET_BYTES,
) -> PhaseSpaceField:
    """A(f, g) = e^{ix·ξ/2} V_g f on the lattice."""
    V = gabor_transform(f, g, frequency, memory_budget)
    xi = V.frequency.coords()

    def ramp(idx: tuple[int, ...], values: np.ndarray) -> np.ndarray:
        x = _position_vector(V.position, idx)
        phase = sum(x[j] * xi[j] for j in range(len(x)))
        return values * np.exp(0.5j * phase)

    return V.map(ramp, f"A[{f.label},{g.label}]")


def symplectic_gabor(
    f: Field, g: Field, memory_budget: int = MEMORY_BUDGET_BYTES
) -> PhaseSpaceField:
    """
    𝒱_g f(z, ζ) = 2^d V_g f(z, 2Jζ).

    ζ runs over the lattice of half the FFT dual spacing, on which 2J is an
    exact reindexing of the FFT frequency block.
    """
    d = require_phase_space(f.grid)
    V = gabor_transform(f, g, memory_budget=memory_budget)
    perm = tuple(range(d, 2 * d)) + tuple(range(d))

    def reindex(idx: tuple[int, ...], values: np.ndarray) -> np.ndarray:
        return (2.0**d) * negate_axes(np.transpose(values, perm), range(d))

    return PhaseSpaceField(
        f.grid,
        symplectic_grid(f.grid),
        lambda idx: reindex(idx, V.at(idx)),
        f"SV[{f.label},{g.label}]",
        memory_budget,
    )


def wigner_band_check(f: Field) -> None:
    """Spectral content beyond π/(2h) would alias in the Wigner transform."""
    spectrum = np.abs(fourier(f).values)
    peak = spectrum.max(initial=0.0)
    if peak == 0.0:
        return
    xi = np.abs(f.grid.dual().axis())
    outside = xi >= math.pi / (2.0 * f.grid.spacing)
    for ax in range(f.grid.dim):
        tail = np.compress(outside, spectrum, axis=ax).max(initial=0.0)
        if tail > WIGNER_SPECTRAL_FLOOR * peak:
            raise BandLimitError(
                f"field '{f.label}' has spectral content {tail / peak:.1e} beyond "
                "π/(2h); the Wigner transform would alias. Refine the grid"
            )


def wigner_grid(grid: GridSpec) -> GridSpec:
    """Natural Wigner frequency lattice: half-width π/(2h)."""
    return GridSpec(
        dim=grid.dim, points=grid.points, half_width=math.pi / (2.0 * grid.spacing)
    )


def wigner(
    f: Field,
    g: Field,
    frequency: GridSpec | None = None,
    memory_budget: int = MEMORY_BUDGET_BYTES,
) -> PhaseSpaceField:
    """
    W(f, g) = 2^n (2π)^{-n/2} Σ_v e^{-2iξ·v} f(x+v) conj(g(x-v)) h^n.

    The frequency lattice defaults to half-width π/(2h), where the sum is a
    plain FFT; any other lattice goes through the chirp-z transform.
    """
    f.require_same_grid(g)
    wigner_band_check(f)
    wigner_band_check(g)
    grid = f.grid
    n = grid.dim
    N = grid.points
    half = N // 2
    freq = frequency if frequency is not None else wigner_grid(grid)
    if freq.dim != n:
        raise GridError(f"frequency lattice has dim {freq.dim}, expected {n}")
    scale = (2.0**n) * (2.0 * math.pi) ** (-n / 2.0) * grid.weight
    omega = 2.0 * grid.spacing * freq.spacing
    conj_g = np.conj(g.values)
    v = np.arange(N) - half

    def slice_at(idx: tuple[int, ...]) -> np.ndarray:
        plus_idx = []
        minus_idx = []
        mask = np.ones((1,) * n, dtype=bool)
        for j, p in enumerate(idx):
            shape = [1] * n
            shape[j] = N
            plus = (p + v).reshape(shape)
            minus = (p - v).reshape(shape)
            mask = mask & (plus >= 0) & (plus < N) & (minus >= 0) & (minus < N)
            plus_idx.append(np.clip(plus, 0, N - 1))
            minus_idx.append(np.clip(minus, 0, N - 1))
        product = np.where(
            mask, f.values[tuple(plus_idx)] * conj_g[tuple(minus_idx)], 0.0
        )
        values = centered_sum_axes(
            product,
            omega=omega,
            in_start=-half,
            out_start=-freq.points // 2,
            out_len=freq.points,
            axes=range(n),
        )
        return values * scale

    return PhaseSpaceField(grid, freq, slice_at, f"W[{f.label},{g.label}]", memory_budget)


def as_field(F: PhaseSpaceField, label: str = "") -> Field:
    """
    View a phase-space field as a Field on R^{2n}.

    Position and frequency lattices must coincide.
    """
    if not F.position.same_lattice(F.frequency):
        raise GridError(
            "position and frequency lattices differ; pass a matching frequency grid"
        )
    return Field(F.position.doubled(), F.materialize(), label or F.label)
