"""
Spectral projections onto Hermite and Landau eigenspaces.

    P_k f = Σ_{|α|=k} ⟨f, Φ_α⟩ Φ_α                   (H on R^d, eigenvalue d+2k)
    Q_k f = Σ_{|β|=k} Σ_α ⟨f, Φ_{α,β}⟩ Φ_{α,β}       (L on R^{2d}, eigenvalue d+2k)

Landau coefficients are never formed from the O(K^{2d}) special Hermite
functions. Since Φ_{α,β} = A_J(Φ_α ⊗ Φ_β) and A_J is unitary,

    c_{α,β} = ⟨A_J* f, Φ_α ⊗ Φ_β⟩ = h^{2d} (Hᵀ G H)_{α,β}

with G the samples of A_J* f as an (N^d × N^d) matrix and H the catalog's
Hermite columns.
"""

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Literal

import numpy as np

from ..data.defaults import MEMORY_BUDGET_BYTES, get_dimension_defaults
from ..errors import CatalogError, GridError, ParameterError
from ..lattice.field import Field
from ..lattice.grid import require_phase_space
from ..schemas.grid import GridSpec
from ..specfun.catalog import BasisCatalog
from ..specfun.hermite import MultiIndex
from ..specfun.special_hermite import laguerre_kernel
from ..twisted.convolution import twisted_convolution
from .metaplectic import metaplectic_AJ

logger = logging.getLogger(__name__)

# Distance kept between the top Hermite turning point and the lattice limits
TURNING_MARGIN = 1.0


def max_resolved_order(grid: GridSpec) -> int:
    """Largest order whose turning point √(2k+1) clears both window and Nyquist."""
    reach = min(grid.half_width, math.pi / grid.spacing) - TURNING_MARGIN
    return max(0, int((reach * reach - 1.0) // 2))


def resolve_catalog(
    base: GridSpec, order: int | None = None, catalog: BasisCatalog | None = None
) -> BasisCatalog:
    """
    The catalog to project with on the base lattice.

    A given catalog is used as is; otherwise one is built up to
    min(order, max_resolved_order(base)). Callers check the orders they need.
    """
    if catalog is not None:
        if not catalog.grid.same_lattice(base):
            raise GridError(
                f"catalog lattice {catalog.grid.describe()} does not match "
                f"{base.describe()}"
            )
        return catalog
    if order is None:
        order = get_dimension_defaults(base.dim)["truncation"]
    k_max = min(order, max_resolved_order(base))
    if k_max < order:
        logger.debug(f"Truncating at K={k_max} (order {order} is not resolved)")
    return BasisCatalog.build(base.dim, k_max, base, workers=1)


def _orders(indices: list[MultiIndex]) -> np.ndarray:
    return np.array([a.order for a in indices])


# =============================================================================
# Hermite expansions on R^d
# =============================================================================


def hermite_coefficients(
    f: Field, catalog: BasisCatalog
) -> tuple[list[MultiIndex], np.ndarray]:
    """⟨f, Φ_α⟩ for every cataloged α."""
    indices, H = catalog.hermite_matrix()
    return indices, (H.T @ f.values.reshape(-1)) * f.grid.weight


def hermite_synthesis(coeffs: np.ndarray, catalog: BasisCatalog, label: str = "") -> Field:
    _, H = catalog.hermite_matrix()
    return Field(catalog.grid, H @ coeffs, label)


def project_hermite(f: Field, k: int, catalog: BasisCatalog | None = None) -> Field:
    """P_k f."""
    if k < 0:
        raise ParameterError(f"order must be ≥ 0, got {k}")
    catalog = resolve_catalog(f.grid, k, catalog)
    catalog.require_order(k)
    indices, c = hermite_coefficients(f, catalog)
    c = np.where(_orders(indices) == k, c, 0.0)
    return hermite_synthesis(c, catalog, f"P{k}[{f.label}]")


# =============================================================================
# Landau expansions on R^{2d}
# =============================================================================


@dataclass
class SpectralCoeffs:
    """c_{α,β} = ⟨f, Φ_{α,β}⟩ for |α|, |β| ≤ cutoff."""

    indices: list[MultiIndex]
    matrix: np.ndarray
    cutoff: int

    def __getitem__(self, pair) -> complex:
        alpha, beta = (MultiIndex.of(p) for p in pair)
        try:
            i, j = self.indices.index(alpha), self.indices.index(beta)
        except ValueError:
            raise CatalogError(f"({alpha}, {beta}) is beyond cutoff {self.cutoff}") from None
        return complex(self.matrix[i, j])

    @property
    def orders(self) -> np.ndarray:
        return _orders(self.indices)

    def energy(self) -> float:
        """Σ|c_{α,β}|², bounded by ‖f‖² (Bessel)."""
        return float(np.sum(np.abs(self.matrix) ** 2))

    def level(self, k: int) -> "SpectralCoeffs":
        """Coefficients of Q_k f: columns with |β| = k."""
        mask = (self.orders == k)[None, :]
        return SpectralCoeffs(self.indices, np.where(mask, self.matrix, 0.0), self.cutoff)

    def scaled(self, factors: np.ndarray) -> "SpectralCoeffs":
        """Multiply column β by factors[|β|]."""
        return SpectralCoeffs(
            self.indices, self.matrix * np.asarray(factors)[self.orders][None, :], self.cutoff
        )

    def as_dict(self) -> dict[tuple[MultiIndex, MultiIndex], complex]:
        return {
            (a, b): complex(self.matrix[i, j])
            for i, a in enumerate(self.indices)
            for j, b in enumerate(self.indices)
        }


def _check_catalog_grid(f: Field, catalog: BasisCatalog) -> None:
    if not catalog.phase_grid.same_lattice(f.grid):
        raise GridError(
            f"catalog phase lattice {catalog.phase_grid.describe()} does not match "
            f"{f.grid.describe()}"
        )


LandauRoute = Literal["catalog", "tensor"]


def catalog_route_fits(catalog: BasisCatalog) -> bool:
    """Whether every Φ_{α,β} of the catalog fits in the memory budget."""
    return catalog.special_bytes() <= MEMORY_BUDGET_BYTES


def landau_coefficients(
    f: Field,
    catalog: BasisCatalog,
    levels: Iterable[int] | None = None,
    route: LandauRoute = "catalog",
) -> SpectralCoeffs:
    """
    c_{α,β} = ⟨f, Φ_{α,β}⟩, restricted to columns with |β| in `levels`.

    catalog: inner products against the cataloged Φ_{α,β}
    tensor:  Hermite coefficients of A_J* f, never materializing Φ_{α,β}
    """
    require_phase_space(f.grid)
    _check_catalog_grid(f, catalog)
    indices, H = catalog.hermite_matrix()
    orders = _orders(indices)
    keep = np.ones(len(indices), bool) if levels is None else np.isin(orders, list(levels))
    if route == "tensor":
        size = catalog.grid.size
        G = metaplectic_AJ(f, adjoint=True).values.reshape(size, size)
        C = (H.T @ G @ H) * catalog.grid.weight**2
        return SpectralCoeffs(indices, np.where(keep[None, :], C, 0.0), catalog.k_max)
    if route != "catalog":
        raise ParameterError(f"unknown coefficient route '{route}'")
    samples = f.values.reshape(-1)
    C = np.zeros((len(indices), len(indices)), complex)
    for j in np.flatnonzero(keep):
        C[:, j] = catalog.special_block(indices[j]).conj().T @ samples
    return SpectralCoeffs(indices, C * f.grid.weight, catalog.k_max)


def landau_synthesis(
    coeffs: SpectralCoeffs,
    catalog: BasisCatalog,
    label: str = "",
    route: LandauRoute = "catalog",
) -> Field:
    """Σ c_{α,β} Φ_{α,β}; the tensor route computes A_J(Σ c_{α,β} Φ_α ⊗ Φ_β)."""
    _, H = catalog.hermite_matrix()
    if route == "tensor":
        tensor = Field(catalog.phase_grid, H @ coeffs.matrix @ H.T, label)
        return Field(catalog.phase_grid, metaplectic_AJ(tensor).values, label)
    if route != "catalog":
        raise ParameterError(f"unknown synthesis route '{route}'")
    out = np.zeros(catalog.phase_grid.size, complex)
    for j in np.flatnonzero(np.any(coeffs.matrix != 0, axis=0)):
        out += catalog.special_block(coeffs.indices[j]) @ coeffs.matrix[:, j]
    return Field(catalog.phase_grid, out.reshape(catalog.phase_grid.shape), label)


def second_block_hermite(
    f: Field, catalog: BasisCatalog
) -> tuple[list[MultiIndex], np.ndarray, np.ndarray]:
    """
    Hermite coefficients of A_J* f along the second block only.

    Returns the index list, B with B[a, β] = ∫ (A_J* f)(a, b) Φ_β(b) db, and
    the samples of A_J* f as an (N^d × N^d) matrix.
    """
    _check_catalog_grid(f, catalog)
    indices, H = catalog.hermite_matrix()
    size = catalog.grid.size
    G = metaplectic_AJ(f, adjoint=True).values.reshape(size, size)
    return indices, (G @ H) * catalog.grid.weight, G


def project_landau(
    f: Field,
    k: int,
    route: Literal["spectral", "twisted", "transferred"] = "spectral",
    catalog: BasisCatalog | None = None,
) -> Field:
    """
    Q_k f.

    spectral:    Σ_{|β|=k} Σ_{|α|≤K} c_{α,β} Φ_{α,β}
    twisted:     (8π)^{-d} f × φ_k
    transferred: A_J (I ⊗ P_k) A_J* f, exact in α
    """
    d = require_phase_space(f.grid)
    if k < 0:
        raise ParameterError(f"order must be ≥ 0, got {k}")
    label = f"Q{k}[{f.label}]"
    if route == "twisted":
        kernel = laguerre_kernel(k, f.grid)
        product = twisted_convolution(f, kernel, convention="landau")
        return Field(f.grid, product.values * (8.0 * math.pi) ** (-d), label)

    catalog = resolve_catalog(f.grid.half(), k, catalog)
    catalog.require_order(k)
    if route == "spectral":
        coeffs = landau_coefficients(f, catalog, levels=(k,))
        return landau_synthesis(coeffs, catalog, label)
    if route == "transferred":
        indices, B, _ = second_block_hermite(f, catalog)
        _, H = catalog.hermite_matrix()
        B = np.where((_orders(indices) == k)[None, :], B, 0.0)
        tensor = Field(f.grid, B @ H.T)
        return Field(f.grid, metaplectic_AJ(tensor).values, label)
    raise ParameterError(f"unknown projection route '{route}'")
