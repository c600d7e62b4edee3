"""
M¹ norm growth of Hermite and Laguerre functions.

‖Φ_β‖_{M¹} = ‖A(Φ_β, Φ_β)‖_{L¹} = ‖Φ_{β,β}‖_{L¹}, which factorizes over the
d planes into one-dimensional Laguerre integrals

    ‖L_k(|z|²/2) e^{-|z|²/4}‖_{L¹(R²)} = 2π ∫₀^∞ |L_k(y)| e^{-y/2} dy.

The integrand changes sign only at the Laguerre roots, so Gauss-Legendre on
each interval between roots plus a Gauss-Laguerre tail is exact up to the
exponential factor.
"""

import logging
import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.special import roots_laguerre, roots_legendre

from ..errors import ParameterError
from ..phasespace.norms import field_norm
from ..schemas.grid import GridSpec
from ..schemas.norms import MixedNormSpec
from .hermite import indices_of_order
from .laguerre import laguerre_table
from .special_hermite import laguerre_kernel, special_hermite_diagonal

logger = logging.getLogger(__name__)

LEGENDRE_NODES = 32


@dataclass
class GrowthRow:
    """One row of the growth table; grid columns are None without a grid."""

    k: int
    hermite_m1: float
    laguerre_kernel_m1: float | None = None
    special_diagonal_m1: float | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def _laguerre_values(k: int, y: np.ndarray) -> np.ndarray:
    return laguerre_table(k, 0.0, y)[k]


def laguerre_l1_integral(k: int) -> float:
    """∫₀^∞ |L_k(y)| e^{-y/2} dy."""
    if k < 0:
        raise ParameterError(f"Laguerre degree must be ≥ 0, got {k}")
    x, w = roots_legendre(LEGENDRE_NODES)
    roots = np.sort(roots_laguerre(k)[0]) if k > 0 else np.array([])
    edges = np.concatenate(([0.0], roots))
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:], strict=True):
        y = 0.5 * (b - a) * x + 0.5 * (b + a)
        total += 0.5 * (b - a) * abs(np.sum(w * _laguerre_values(k, y) * np.exp(-0.5 * y)))

    # ∫_{r}^∞ |L_k(y)| e^{-y/2} dy = 2 e^{-r/2} ∫₀^∞ |L_k(r + 2u)| e^{-u} du
    r = edges[-1]
    u, wu = roots_laguerre(k + 8)
    tail = 2.0 * math.exp(-0.5 * r) * abs(np.sum(wu * _laguerre_values(k, r + 2.0 * u)))
    return float(total + tail)


def hermite_m1_norm(beta) -> float:
    """‖Φ_β‖_{M¹} = ∏_j (2π)^{1/2} ∫₀^∞ |L_{β_j}(y)| e^{-y/2} dy."""
    return float(
        np.prod([math.sqrt(2.0 * math.pi) * laguerre_l1_integral(b) for b in beta])
    )


def m1_norm_growth_table(
    k_max: int, d: int = 1, k_min: int = 0, grid: GridSpec | None = None
) -> list[GrowthRow]:
    """
    Rows (k, max_{|β|=k} ‖Φ_β‖_{M¹}, ‖φ_k‖_{M¹}, ‖Φ_{β,β}‖_{M¹}).

    The last two columns need a phase-space grid and are computed through the
    Gabor transform with a Gaussian window, so they are only practical for
    small k.
    """
    if k_max < k_min or k_min < 0:
        raise ParameterError(f"invalid order range {k_min}..{k_max}")
    integrals = [laguerre_l1_integral(k) for k in range(k_max + 1)]
    rows = []
    for k in range(k_min, k_max + 1):
        norms = [
            float(np.prod([math.sqrt(2.0 * math.pi) * integrals[b] for b in beta]))
            for beta in indices_of_order(d, k)
        ]
        row = GrowthRow(k=k, hermite_m1=max(norms))
        if grid is not None:
            row.laguerre_kernel_m1, row.special_diagonal_m1 = _grid_norms(k, d, grid)
        rows.append(row)
    logger.debug(f"Growth table for d={d}, k={k_min}..{k_max}")
    return rows


def _grid_norms(k: int, d: int, grid: GridSpec) -> tuple[float, float]:
    if grid.dim != 2 * d:
        raise ParameterError(f"growth grid must live on R^{2 * d}, got dim {grid.dim}")
    spec = MixedNormSpec(p=1.0, q=1.0)
    beta = (k,) + (0,) * (d - 1)
    return (
        field_norm(laguerre_kernel(k, grid), spec),
        field_norm(special_hermite_diagonal(beta, grid), spec),
    )


def fit_growth_exponent(
    rows: list[GrowthRow], k_range: tuple[int, int] = (8, 32)
) -> float:
    """Least-squares slope of log ‖Φ_β‖_{M¹} against log k over k_range."""
    lo, hi = k_range
    selected = [r for r in rows if lo <= r.k <= hi and r.k > 0]
    if len(selected) < 2:
        raise ParameterError(f"need at least two rows with k in {k_range}")
    log_k = np.log([r.k for r in selected])
    log_n = np.log([r.hermite_m1 for r in selected])
    slope, _ = np.polyfit(log_k, log_n, 1)
    return float(slope)
