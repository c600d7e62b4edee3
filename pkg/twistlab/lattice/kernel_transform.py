"""
Chirped partial Fourier transforms between functions on R^{2d} and integral
kernels on R^d × R^d.

    T_β F(a, b)     = ∫ e^{-iβ x·(a+b)/2} F(x, a-b) dx
    T_β^{-1} K(x,y) = (|β|/2π)^d ∫ e^{iβ x·u} K(u + y/2, u - y/2) du

Composition of kernels, (K1∘K2)(a,c) = ∫ K1(a,b) K2(b,c) db, turns into a
twisted convolution on the function side:

    T_β^{-1}(T_β F1 ∘ T_β F2)(z) = ∫ e^{(iβ/2)σ(z,w)} F1(z-w) F2(w) dw.

Kernels share the base lattice (d, N, R) of the phase-space grid. Out-of-window
samples are zero.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..errors import GridError
from ..schemas.grid import GridSpec
from .czt import centered_sum_axes
from .field import Field
from .grid import require_phase_space

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class KernelMatrix:
    """Integral kernel K(a, b) sampled on base lattice × base lattice."""

    grid: GridSpec
    values: np.ndarray

    @property
    def matrix(self) -> np.ndarray:
        """Kernel as an (N^d, N^d) matrix."""
        return self.values.reshape(self.grid.size, self.grid.size)

    def compose(self, other: "KernelMatrix") -> "KernelMatrix":
        """Quadrature composition ∫ K1(a,b) K2(b,c) db."""
        if not self.grid.same_lattice(other.grid):
            raise GridError("kernels live on different lattices")
        product = (self.matrix @ other.matrix) * self.grid.weight
        return KernelMatrix(self.grid, product.reshape(self.values.shape))

    def apply(self, f: Field) -> Field:
        """(K f)(a) = ∫ K(a, b) f(b) db."""
        if not self.grid.same_lattice(f.grid):
            raise GridError("kernel and field live on different lattices")
        values = (self.matrix @ f.values.reshape(-1)) * self.grid.weight
        return Field(self.grid, values.reshape(self.grid.shape))

    def scaled(self, factor: complex) -> "KernelMatrix":
        return KernelMatrix(self.grid, self.values * factor)


def _axis_map(array2d: np.ndarray, j: int, d: int) -> np.ndarray:
    shape = [1] * (2 * d)
    shape[j] = array2d.shape[0]
    shape[d + j] = array2d.shape[1]
    return array2d.reshape(shape)


def gather_blocks(
    source: np.ndarray,
    first_index: np.ndarray,
    second_index: np.ndarray,
    valid: np.ndarray,
    d: int,
) -> np.ndarray:
    """
    out[p, q] = source[first(p_j, q_j)..., second(p_j, q_j)...] per axis j.

    The same (P × Q) index maps apply on every axis; out-of-range entries
    (valid False on any axis) are zero. Output shape is (P,)*d + (Q,)*d.
    """
    idx = []
    for j in range(d):
        upper = source.shape[j] - 1
        idx.append(_axis_map(np.clip(first_index, 0, upper), j, d))
    for j in range(d):
        upper = source.shape[d + j] - 1
        idx.append(_axis_map(np.clip(second_index, 0, upper), j, d))
    mask = np.ones((1,) * (2 * d), dtype=bool)
    for j in range(d):
        mask = mask & _axis_map(valid, j, d)
    return np.where(mask, source[tuple(idx)], 0.0)


def alias_free_points(half_width: float, beta: float) -> float:
    """Smallest N for which e^{-iβ x·(a+b)/2} is resolved: 2|β|R²/π."""
    return 2.0 * abs(beta) * half_width**2 / math.pi


def require_alias_free(grid: GridSpec, beta: float) -> None:
    floor = alias_free_points(grid.half_width, beta)
    if grid.points < floor * (1.0 - 1e-12):
        raise GridError(
            f"N={grid.points} aliases the β={beta:g} chirp on half-width "
            f"{grid.half_width:.4g}; need N ≥ {floor:.1f} or a smaller window"
        )


def function_to_kernel(F: Field, beta: float) -> KernelMatrix:
    """T_β F on the base lattice."""
    d = require_phase_space(F.grid)
    grid = F.grid
    require_alias_free(grid, beta)
    N = grid.points
    h = grid.spacing
    # S(s, m) = h^d Σ_i e^{-i(βh²/2)(i-N/2)s} F(i, m), s = J+K-N
    S = centered_sum_axes(
        F.values,
        omega=beta * h * h / 2.0,
        in_start=-N // 2,
        out_start=-N,
        out_len=2 * N - 1,
        axes=range(d),
    ) * (h**d)
    J = np.arange(N)[:, None]
    K = np.arange(N)[None, :]
    m = J - K + N // 2
    values = gather_blocks(S, J + K, m, (m >= 0) & (m < N), d)
    return KernelMatrix(grid.half(), values)


def diagonal_fourier(kernel: np.ndarray, grid: GridSpec, scale: float) -> np.ndarray:
    """
    G(k, m) = h^d Σ_u e^{i·scale·(k - N/2)·u} K(u + y_m/2, u - y_m/2).

    kernel has shape (N,)*d + (N,)*d on the base lattice `grid`; the
    diagonal offset y_m = (m - N/2) h runs over the same lattice and u over
    midpoints (n + M/2 - N/2) h, M = m - N/2.
    """
    d = grid.dim
    N = grid.points
    h = grid.spacing
    n = np.arange(N)[:, None]
    M = np.arange(N)[None, :] - N // 2
    D = gather_blocks(kernel, n + M, np.broadcast_to(n, (N, N)), (n + M >= 0) & (n + M < N), d)
    G = centered_sum_axes(
        D,
        omega=-scale * h,
        in_start=-N // 2,
        out_start=-N // 2,
        out_len=N,
        axes=range(d),
    )
    k_offset = np.arange(N) - N // 2
    phase_1d = np.exp(0.5j * scale * h * np.multiply.outer(k_offset, M[0]))
    phase = np.ones((1,) * (2 * d), dtype=np.complex128)
    for j in range(d):
        phase = phase * _axis_map(phase_1d, j, d)
    return G * phase * (h**d)


def kernel_to_function(kernel: KernelMatrix, beta: float, label: str = "") -> Field:
    """T_β^{-1} K on the phase-space lattice (2d, N, R)."""
    grid = kernel.grid
    d = grid.dim
    G = diagonal_fourier(kernel.values, grid, scale=beta * grid.spacing)
    values = G * (abs(beta) / (2.0 * math.pi)) ** d
    return Field(grid.doubled(), values, label)


def outer_kernel(f: Field, g: Field, conjugate: bool = False) -> KernelMatrix:
    """K(a, b) = f(a) g(b), or f(a) conj(g(b))."""
    f.require_same_grid(g)
    second = np.conj(g.values) if conjugate else g.values
    return KernelMatrix(f.grid, np.multiply.outer(f.values, second))
