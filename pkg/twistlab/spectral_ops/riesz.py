"""
Riesz transforms of the Hermite operator: R_j = A_j H^{-1/2} with the
raising operator A_j = -∂_{x_j} + x_j.

On the Hermite basis A_j Φ_α = √(2(α_j+1)) Φ_{α+e_j} and
H^{-1/2} Φ_α = (d+2|α|)^{-1/2} Φ_α, so R_j has an explicit coefficient
matrix.
"""

import logging
import math

import numpy as np

from ..errors import ParameterError
from ..lattice.field import Field
from ..specfun.catalog import BasisCatalog
from ..specfun.hermite import MultiIndex, indices_up_to
from .multipliers import MultiplierSpec, multiplier_apply
from .operators import ladder_raise
from .projections import resolve_catalog

logger = logging.getLogger(__name__)


def riesz_transform(f: Field, j: int, catalog: BasisCatalog | None = None) -> Field:
    """R_j f = ladder_raise(H^{-1/2} f, j)."""
    d = f.grid.dim
    catalog = resolve_catalog(f.grid, None, catalog)
    m = MultiplierSpec.from_function(lambda x: x**-0.5, d, catalog.k_max, "x^-1/2")
    smoothed = multiplier_apply(f, m, "hermite", catalog)
    out = ladder_raise(smoothed, j)
    return Field(f.grid, out.values, f"R{j}[{f.label}]")


def riesz_coefficient_matrix(
    k_max: int, d: int = 1, j: int = 0
) -> tuple[list[MultiIndex], np.ndarray]:
    """
    Matrix of R_j compressed to the span of Φ_α with |α| ≤ k_max.

    Entry (α + e_j, α) is √(2(α_j+1)/(d+2|α|)); images of top-order
    functions leave the span and are dropped.
    """
    if not 0 <= j < d:
        raise ParameterError(f"axis {j} out of range for d={d}")
    indices = indices_up_to(d, k_max)
    position = {alpha: n for n, alpha in enumerate(indices)}
    matrix = np.zeros((len(indices), len(indices)))
    for n, alpha in enumerate(indices):
        raised = list(alpha)
        raised[j] += 1
        target = position.get(MultiIndex(tuple(raised)))
        if target is not None:
            raise_factor = 2.0 * (alpha.components[j] + 1)
            matrix[target, n] = math.sqrt(raise_factor / (d + 2 * alpha.order))
    return indices, matrix
