"""
Weyl calculus on lattices.

    a^w f(x) = (2π)^{-d} ∬ e^{iξ·(x-y)} a((x+y)/2, ξ) f(y) dy dξ

The kernel of a^w is k(x, y) = (2π)^{-d} ∫ e^{iξ·(x-y)} a((x+y)/2, ξ) dξ and
the symbol comes back as a(x, ξ) = ∫ e^{-iξ·v} k(x + v/2, x - v/2) dv. The
midpoint (x+y)/2 of two kernel samples lands on a lattice of half their
spacing, so symbols are always sampled twice as finely as the kernels they
act through and no interpolation is needed.
"""

import logging
import math
from typing import Literal

import numpy as np

from ..data.defaults import MEMORY_BUDGET_BYTES
from ..errors import GridError, MemoryBudgetError, ParameterError
from ..lattice.czt import centered_sum_axes
from ..lattice.field import Field
from ..lattice.fourier import symplectic_fourier
from ..lattice.grid import negate_axes, require_phase_space
from ..lattice.kernel_transform import KernelMatrix, gather_blocks, require_alias_free
from ..schemas.grid import GridSpec
from .convolution import twisted_convolution
from .symbols import RegisteredSymbol, is_registered

logger = logging.getLogger(__name__)


def kernel_grid(symbol_grid: GridSpec) -> GridSpec:
    """Kernel lattice (d, N/2, R) of a symbol lattice (2d, N, R)."""
    d = require_phase_space(symbol_grid)
    if symbol_grid.points % 4:
        raise GridError(
            f"Weyl kernels need N divisible by 4, got N={symbol_grid.points}"
        )
    return GridSpec(
        dim=d, points=symbol_grid.points // 2, half_width=symbol_grid.half_width
    )


def symbol_to_kernel(a: Field) -> KernelMatrix:
    """Kernel of a^w on (d, N/2, R) for a symbol sampled on (2d, N, R)."""
    grid = a.grid
    d = require_phase_space(grid)
    base = kernel_grid(grid)
    require_alias_free(grid, 4.0)
    N = grid.points
    P = N // 2
    h = grid.spacing
    # S(i, m) = Σ_l e^{2ih²(l - N/2)(m - (P-1))} a(i, l), m - (P-1) = J - K
    S = centered_sum_axes(
        a.values,
        omega=-2.0 * h * h,
        in_start=-N // 2,
        out_start=-(P - 1),
        out_len=N - 1,
        axes=range(d, 2 * d),
    )
    J = np.arange(P)[:, None]
    K = np.arange(P)[None, :]
    values = gather_blocks(S, J + K, J - K + P - 1, np.ones((P, P), dtype=bool), d)
    return KernelMatrix(base, values * ((2.0 * math.pi) ** (-d) * h**d))


def kernel_to_symbol(kernel: KernelMatrix, label: str = "") -> Field:
    """Weyl symbol on (2d, 2P, R) of a kernel on (d, P, R)."""
    base = kernel.grid
    d = base.dim
    P = base.points
    N = 2 * P
    grid = GridSpec(dim=2 * d, points=N, half_width=base.half_width)
    h = grid.spacing
    # D(i, t) = k((i+s)/2, (i-s)/2) with s = t - (P-1) of the parity of i
    i = np.arange(N)[:, None]
    s = np.arange(N - 1)[None, :] - (P - 1)
    J = (i + s) // 2
    K = (i - s) // 2
    valid = ((i + s) % 2 == 0) & (J >= 0) & (J < P) & (K >= 0) & (K < P)
    D = gather_blocks(kernel.values, J, K, valid, d)
    # v = x - y = 2h·s steps by 4h within one parity class
    values = centered_sum_axes(
        D,
        omega=2.0 * h * h,
        in_start=-(P - 1),
        out_start=-N // 2,
        out_len=N,
        axes=range(d, 2 * d),
    )
    return Field(grid, values * (4.0 * h) ** d, label)


def weyl_product(
    a: Field, b: Field, route: Literal["kernel", "twisted"] = "kernel"
) -> Field:
    """
    Symbol a#b of a^w b^w.

    kernel: compose the operator kernels of a and b.
    twisted: a#b = F_σ(a ×_W b^∨) with the weyl-normalized twisted convolution.
    Both need N ≥ 8R²/π.
    """
    d = require_phase_space(a.grid)
    a.require_same_grid(b)
    label = f"{a.label}#{b.label}"
    if route == "kernel":
        composed = symbol_to_kernel(a).compose(symbol_to_kernel(b))
        return kernel_to_symbol(composed, label)
    if route == "twisted":
        b_check = b.with_values(negate_axes(b.values, range(2 * d)))
        product = twisted_convolution(a, b_check, convention="weyl")
        result = symplectic_fourier(product, target=a.grid)
        return Field(a.grid, result.values, label)
    raise ParameterError(f"unknown Weyl product route '{route}'")


def sampled_symbol_kernel(a: Field, f_grid: GridSpec) -> KernelMatrix:
    """
    Kernel on f_grid = (d, N, R) of a symbol sampled on (2d, 2N, R).

    Symbol index i = J + K is the midpoint of kernel samples J and K.
    """
    d = f_grid.dim
    N = f_grid.points
    expected = GridSpec(dim=2 * d, points=2 * N, half_width=f_grid.half_width)
    if not a.grid.same_lattice(expected):
        raise GridError(
            f"sampled symbol must live on {expected.describe()}, "
            f"got {a.grid.describe()}"
        )
    require_alias_free(f_grid, 1.0)
    h = f_grid.spacing
    # Â(i, t) = Σ_l e^{i(h²/2)(l - N)(t - (N-1))} a(i, l), t - (N-1) = J - K
    S = centered_sum_axes(
        a.values,
        omega=-0.5 * h * h,
        in_start=-N,
        out_start=-(N - 1),
        out_len=2 * N - 1,
        axes=range(d, 2 * d),
    )
    J = np.arange(N)[:, None]
    K = np.arange(N)[None, :]
    values = gather_blocks(S, J + K, J - K + N - 1, np.ones((N, N), dtype=bool), d)
    return KernelMatrix(f_grid, values * ((2.0 * math.pi) ** (-d) * (h / 2.0) ** d))


def weyl_apply(a: "Field | RegisteredSymbol", f: Field) -> Field:
    """
    a^w f.

    Registered closed-form symbols are applied analytically. A sampled symbol
    must live on the doubled lattice (2d, 2N, R) of f's grid (d, N, R).
    """
    if isinstance(a, RegisteredSymbol):
        return a.apply(f)
    if not is_registered(a) and a.shell_ratio() > 1e-8:
        logger.warning(
            f"symbol '{a.label}' neither decays on its window nor is a registered "
            "closed form; a^w f may be inaccurate"
        )
    kernel = sampled_symbol_kernel(a, f.grid)
    out = kernel.apply(f)
    return Field(f.grid, out.values, f"{a.label}^w[{f.label}]")


def sampled_weyl_apply(symbol: RegisteredSymbol, f: Field) -> Field:
    """
    a^w f from samples of a closed-form symbol on the doubled lattice of f.

    The symbol is sampled one slab of midpoint x_1 at a time and each slab's
    kernel rows are applied at once, so neither the (2n, 2N, R) samples nor
    the kernel are held whole.
    """
    grid = f.grid
    n = grid.dim
    N = grid.points
    require_alias_free(grid, 1.0)
    slab_bytes = 16 * (2 * N) ** (2 * n - 1)
    if slab_bytes > MEMORY_BUDGET_BYTES:
        raise MemoryBudgetError(
            f"one symbol slab on the doubled lattice of {grid.describe()} needs "
            f"{slab_bytes / 2**20:.0f} MiB"
        )
    h = grid.spacing
    symbol_axis = GridSpec(dim=1, points=2 * N, half_width=grid.half_width).axis()
    rest = np.ix_(*([symbol_axis] * (2 * n - 1)))
    x_rest, xi = list(rest[: n - 1]), list(rest[n - 1 :])
    J = np.arange(N)[:, None]
    K = np.arange(N)[None, :]
    every = np.ones((N, N), dtype=bool)
    rows = N ** (n - 1)
    source = f.values.reshape(N, rows)
    out = np.zeros((N, rows), dtype=np.complex128)
    for i0 in range(2 * N - 1):
        x0 = np.full((1,) * (2 * n - 1), symbol_axis[i0])
        slab = np.broadcast_to(
            symbol.evaluate([x0, *x_rest], xi), (2 * N,) * (2 * n - 1)
        )
        # same ξ sums as sampled_symbol_kernel, x_1 fixed at the midpoint i0
        S = centered_sum_axes(
            slab,
            omega=-0.5 * h * h,
            in_start=-N,
            out_start=-(N - 1),
            out_len=2 * N - 1,
            axes=range(n - 1, 2 * n - 1),
        )
        for J0 in range(max(0, i0 - N + 1), min(i0, N - 1) + 1):
            K0 = i0 - J0
            offset_slice = np.take(S, J0 - K0 + N - 1, axis=n - 1)
            block = gather_blocks(offset_slice, J + K, J - K + N - 1, every, n - 1)
            out[J0] += block.reshape(rows, rows) @ source[K0]
    scale = (2.0 * math.pi) ** (-n) * (h / 2.0) ** n * grid.weight
    logger.debug(f"Quantized '{symbol.kind}' over {2 * N - 1} midpoint slabs")
    return Field(grid, out.reshape(grid.shape) * scale, f"{symbol.kind}^w[{f.label}]")
