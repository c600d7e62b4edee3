"""
Twisted convolution on R^{2d}.

Two normalizations are in use:

    landau:  a×b(z) = 4^d  ∫ e^{(i/2)σ(z,w)} a(z-w) b(w) dw
    weyl:    a×b(z) = π^{-d} ∫ e^{2iσ(z,w)}  a(z-w) b(w) dw

The landau product is the one under which Q_k f = (8π)^{-d} f×φ_k and
e^{-tL} f = f×p_t; the weyl product is the composition law of Weyl symbols
after a symplectic Fourier transform.

Both are evaluated by mapping each factor to an integral kernel, composing
the kernels as matrices and mapping back (O(N^{3d})).
"""

import logging
import math
from typing import Literal

import numpy as np
from scipy.signal import resample

from ..errors import GridError, ParameterError
from ..lattice.czt import centered_sum
from ..lattice.field import Field
from ..lattice.grid import SymplecticForm, require_phase_space
from ..lattice.kernel_transform import function_to_kernel, kernel_to_function
from ..schemas.grid import GridSpec

logger = logging.getLogger(__name__)

Convention = Literal["landau", "weyl"]

CHIRP_CHUNK_BYTES = 64 * 1024 * 1024

# (chirp parameter β, prefactor base c) with a×b = c^d ∫ e^{(iβ/2)σ(z,w)} ...
CONVENTIONS: dict[str, tuple[float, float]] = {
    "landau": (1.0, 4.0),
    "weyl": (4.0, 1.0 / math.pi),
}


def _convention(name: str) -> tuple[float, float]:
    try:
        return CONVENTIONS[name]
    except KeyError:
        raise ParameterError(
            f"unknown twisted convolution convention '{name}' "
            f"(expected one of {sorted(CONVENTIONS)})"
        ) from None


def twisted_convolution(a: Field, b: Field, convention: Convention = "landau") -> Field:
    """a×b through the kernel correspondence."""
    d = require_phase_space(a.grid)
    a.require_same_grid(b)
    beta, base = _convention(convention)
    ka = function_to_kernel(a, beta)
    kb = function_to_kernel(b, beta)
    product = kernel_to_function(ka.compose(kb), beta)
    return Field(a.grid, product.values * base**d, f"{a.label}×{b.label}")


def twisted_convolution_direct(
    a: Field,
    b: Field,
    points: list[tuple[int, ...]],
    convention: Convention = "landau",
) -> np.ndarray:
    """
    Direct lattice sum of a×b at the given output indices.

    O(N^{2d}) per point; meant as an oracle on small grids.
    """
    d = require_phase_space(a.grid)
    a.require_same_grid(b)
    beta, base = _convention(convention)
    grid = a.grid
    N = grid.points
    half = N // 2
    form = SymplecticForm(d)
    w_coords = grid.coords()
    w_index = np.indices(grid.shape)
    out = np.empty(len(points), dtype=np.complex128)
    for n, point in enumerate(points):
        if len(point) != 2 * d:
            raise GridError(f"point {point} does not index a grid of dim {2 * d}")
        z = (np.asarray(point) - half) * grid.spacing
        # a(z - w) lives at index point - w_index + N/2
        shifted = [point[j] - w_index[j] + half for j in range(2 * d)]
        valid = np.all([(s >= 0) & (s < N) for s in shifted], axis=0)
        a_vals = np.where(valid, a.values[tuple(np.clip(s, 0, N - 1) for s in shifted)], 0.0)
        sigma = -form.on_grid(w_coords, z)  # σ(z, w) = -σ(w, z)
        phase = np.exp(0.5j * beta * sigma)
        out[n] = np.sum(phase * a_vals * b.values) * grid.weight * base**d
    return out


def chirp_oversampling(grid: GridSpec, curvature: float) -> int:
    """
    Refinement factor r that resolves e^{(i/4)κ|u|²}·a(u) on grid.

    The chirp adds a local frequency |κ|R/2 at the window edge to a band of
    at most π/h, so r = ⌈1 + |κ|Rh/(2π)⌉.
    """
    spread = abs(curvature) * grid.half_width * grid.spacing / (2.0 * math.pi)
    return max(1, math.ceil(1.0 + spread))


def _plane_transform(
    values: np.ndarray,
    axes: tuple[int, int],
    curvature: float,
    beta: float,
    out_grid: GridSpec,
    step: float,
) -> np.ndarray:
    """
    Σ_u g(u) e^{-(i/2)(κ z·u + βσ(z,u))} over one (x_j, y_j) plane.

    With z = (x, y) and u = (p, q) the phase is p(κx + βy) + q(κy - βx); the
    p sum is a chirp-z transform per output row y, the q sum a contraction.
    """
    N = out_grid.points
    h = out_grid.spacing
    moved = np.moveaxis(values, axes, (-2, -1))
    M = moved.shape[-1]
    batch = moved.shape[:-2]
    flat = moved.reshape(-1, M, M)
    nz = np.arange(N) - N // 2
    nu = np.arange(M) - M // 2
    s = 0.5 * h * step
    cross = np.outer(nz, nu)
    pre = np.exp(-1j * beta * s * cross)
    along = np.exp(-1j * curvature * s * cross)
    back = np.exp(1j * beta * s * cross)
    out = np.empty((flat.shape[0], N, N), dtype=np.complex128)
    rows = max(1, CHIRP_CHUNK_BYTES // (16 * N * M * M))
    for start in range(0, flat.shape[0], rows):
        block = flat[start : start + rows]
        # X[b, y, p, q]: the βyp cross term as a pre-chirp for each output row y
        X = pre[None, :, :, None] * block[:, None, :, :]
        G = centered_sum(
            X,
            omega=curvature * s,
            in_start=-(M // 2),
            out_start=-(N // 2),
            out_len=N,
            axis=2,
        )
        out[start : start + rows] = np.einsum("bkjm,km,jm->bjk", G, along, back)
    return np.moveaxis(out.reshape(batch + (N, N)), (-2, -1), axes)


def chirp_twisted_convolution(
    a: Field,
    curvature: float,
    amplitude: complex = 1.0,
    convention: Convention = "landau",
    oversample: int | None = None,
) -> Field:
    """
    a×b for the Gaussian chirp b(w) = amplitude·e^{(i/4)κ|w|²}.

    b never decays, so it cannot go through the kernel route. With u = z - w
    the chirp factors out of the integral:

        a×b(z) = c^d·amplitude·e^{(i/4)κ|z|²} ∫ g(u) e^{-(i/2)(κ z·u + βσ(z,u))} du
        g(u)   = e^{(i/4)κ|u|²} a(u)

    and the remaining sum splits over the (x_j, y_j) planes. a is refined by
    Fourier resampling (factor chirp_oversampling by default) so that g is
    resolved before it is summed.
    """
    d = require_phase_space(a.grid)
    beta, base = _convention(convention)
    grid = a.grid
    if oversample is None:
        oversample = chirp_oversampling(grid, curvature)
    if oversample < 1:
        raise ParameterError(f"oversampling factor must be ≥ 1, got {oversample}")
    if oversample > 4:
        logger.warning(
            f"κ={curvature:g} needs {oversample}× oversampling on {grid.describe()}"
        )
    values = a.values
    M = oversample * grid.points
    if oversample > 1:
        for axis in range(2 * d):
            values = resample(values, M, axis=axis)
    fine = GridSpec(dim=2 * d, points=M, half_width=grid.half_width)
    g = values * np.exp(0.25j * curvature * fine.radius_squared())
    for j in range(d):
        g = _plane_transform(g, (j, d + j), curvature, beta, grid, fine.spacing)
    post = np.exp(0.25j * curvature * grid.radius_squared())
    out = g * post * (amplitude * base**d * fine.weight)
    return Field(grid, out, f"{a.label}×chirp[{curvature:g}]")
