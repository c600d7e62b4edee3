"""
Reproducible test fields for the verification suites.

Mixtures are seeded, so a suite run is deterministic for a given config.
"""

import numpy as np

from ..errors import ParameterError
from ..lattice.field import Field, tensor
from ..specfun.catalog import BasisCatalog
from ..specfun.hermite import indices_up_to


def gaussian_mixture(
    grid,
    seed: int = 0,
    n_terms: int = 3,
    widths: tuple[float, float] = (0.35, 0.6),
    spread: float = 1.0,
) -> Field:
    """Σ c_j e^{-λ_j|x - x_j|²} with complex c_j, λ_j in `widths`, |x_j|_∞ ≤ spread."""
    if n_terms < 1:
        raise ParameterError(f"mixture needs at least one term, got {n_terms}")
    rng = np.random.default_rng(seed)
    coords = grid.coords()
    values = np.zeros(grid.shape, dtype=np.complex128)
    for _ in range(n_terms):
        lam = rng.uniform(*widths)
        center = rng.uniform(-spread, spread, size=grid.dim)
        amplitude = complex(rng.normal(), rng.normal())
        r2 = sum((coords[j] - center[j]) ** 2 for j in range(grid.dim))
        values += amplitude * np.exp(-lam * r2)
    return Field(grid, values, f"mixture_{seed}")


def hermite_tensor_mixture(
    catalog: BasisCatalog, seed: int = 0, order: int = 3
) -> tuple[Field, Field]:
    """
    f = Σ c_{α,β} Φ_α⊗Φ_β over |α|, |β| ≤ order, and (I⊗H)f.

    Both live on the catalog's phase-space lattice.
    """
    catalog.require_order(order)
    rng = np.random.default_rng(seed)
    d = catalog.d
    grid = catalog.phase_grid
    f = np.zeros(grid.shape, dtype=np.complex128)
    hf = np.zeros(grid.shape, dtype=np.complex128)
    for alpha in indices_up_to(d, order):
        for beta in indices_up_to(d, order):
            c = complex(rng.normal(), rng.normal())
            term = tensor(catalog.hermite(alpha), catalog.hermite(beta)).values
            f += c * term
            hf += c * (d + 2 * beta.order) * term
    return Field(grid, f, f"tensor_mixture_{seed}"), Field(grid, hf, f"(I⊗H)tensor_mixture_{seed}")
