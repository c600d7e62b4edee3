"""
Normalized Hermite functions by the stable three-term recurrence.

    h_0(y)     = π^{-1/4} e^{-y²/2}
    h_{n+1}(y) = y·√(2/(n+1))·h_n(y) - √(n/(n+1))·h_{n-1}(y)

Factorial/Rodrigues evaluation overflows and cancels beyond n ≈ 20; the
recurrence does not.
"""

import itertools
import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

import numpy as np

from ..errors import BandLimitError, ParameterError
from ..lattice.field import Field
from ..schemas.grid import GridSpec


@dataclass(frozen=True, order=True)
class MultiIndex:
    """α ∈ N^d labeling a tensor Hermite function."""

    components: tuple[int, ...]

    def __post_init__(self):
        components = tuple(int(c) for c in self.components)
        if not components or any(c < 0 for c in components):
            raise ParameterError(f"invalid multi-index {self.components}")
        object.__setattr__(self, "components", components)

    @classmethod
    def of(cls, value: "int | Iterable[int] | MultiIndex") -> "MultiIndex":
        if isinstance(value, MultiIndex):
            return value
        if isinstance(value, int):
            return cls((value,))
        return cls(tuple(value))

    @property
    def dim(self) -> int:
        return len(self.components)

    @property
    def order(self) -> int:
        """|α| = Σ α_j."""
        return sum(self.components)

    def __iter__(self) -> Iterator[int]:
        return iter(self.components)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.components) + ")"


def indices_of_order(d: int, k: int) -> list[MultiIndex]:
    """All α ∈ N^d with |α| = k, in lexicographic order."""
    return [
        MultiIndex(combo)
        for combo in itertools.product(range(k + 1), repeat=d)
        if sum(combo) == k
    ]


def indices_up_to(d: int, k_max: int) -> list[MultiIndex]:
    """All α ∈ N^d with |α| ≤ k_max, grouped by order."""
    return [alpha for k in range(k_max + 1) for alpha in indices_of_order(d, k)]


def hermite_table(n_max: int, y: np.ndarray) -> np.ndarray:
    """Rows h_0..h_{n_max} evaluated at y."""
    if n_max < 0:
        raise ParameterError(f"Hermite order must be ≥ 0, got {n_max}")
    y = np.asarray(y, dtype=float)
    table = np.empty((n_max + 1,) + y.shape)
    table[0] = math.pi**-0.25 * np.exp(-0.5 * y * y)
    if n_max >= 1:
        table[1] = math.sqrt(2.0) * y * table[0]
    for n in range(1, n_max):
        table[n + 1] = (
            y * math.sqrt(2.0 / (n + 1)) * table[n]
            - math.sqrt(n / (n + 1)) * table[n - 1]
        )
    return table


def require_resolved(n: int, grid: GridSpec) -> None:
    """h_n oscillates out to √(2n+1) in both position and frequency."""
    turning = math.sqrt(2 * n + 1)
    if turning > grid.half_width:
        raise BandLimitError(
            f"Hermite order {n}: turning point {turning:.3f} lies outside "
            f"half-width {grid.half_width:.3f}"
        )
    nyquist = math.pi / grid.spacing
    if turning > nyquist:
        raise BandLimitError(
            f"Hermite order {n}: frequency turning point {turning:.3f} above "
            f"Nyquist {nyquist:.3f}"
        )


def hermite_function(n: int, grid: GridSpec) -> Field:
    """Samples of h_n on a one-dimensional grid."""
    if n < 0:
        raise ParameterError(f"Hermite order must be ≥ 0, got {n}")
    require_resolved(n, grid)
    values = hermite_table(n, grid.axis())[n]
    return Field(grid.with_dim(1), values, f"h_{n}")


def hermite_nd(alpha, grid: GridSpec) -> Field:
    """Φ_α = ⊗_j h_{α_j} on a d-dimensional grid."""
    alpha = MultiIndex.of(alpha)
    if alpha.dim != grid.dim:
        raise ParameterError(f"multi-index {alpha} does not match grid dim {grid.dim}")
    top = max(alpha.components)
    require_resolved(top, grid)
    table = hermite_table(top, grid.axis())
    values = table[alpha.components[0]]
    for a in alpha.components[1:]:
        values = np.multiply.outer(values, table[a])
    return Field(grid, values, f"Phi_{alpha}")


def hermite_matrix(grid: GridSpec, k_max: int) -> tuple[list[MultiIndex], np.ndarray]:
    """
    Columns Φ_α for |α| ≤ k_max, flattened over the grid.

    Returns the index list and an array of shape (N^d, #indices).
    """
    require_resolved(k_max, grid)
    table = hermite_table(k_max, grid.axis())
    indices = indices_up_to(grid.dim, k_max)
    columns = []
    for alpha in indices:
        values = table[alpha.components[0]]
        for a in alpha.components[1:]:
            values = np.multiply.outer(values, table[a])
        columns.append(values.reshape(-1))
    return indices, np.stack(columns, axis=1)
