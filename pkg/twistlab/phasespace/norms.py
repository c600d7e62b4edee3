"""
Weighted mixed Lebesgue norms of phase-space fields.

Modulation norms integrate over the position block first, amalgam norms over
the frequency block first. Both reduce slice by slice, so the full phase-space
array is never formed.
"""

import logging
import math

import numpy as np

from ..errors import DataError
from ..lattice.field import Field, quadrature_lp_norm
from ..schemas.norms import MixedNormSpec
from .field import PhaseSpaceField
from .transforms import gabor_transform, symplectic_gabor

logger = logging.getLogger(__name__)


def polynomial_weight(
    x_squared: float | np.ndarray, xi_squared: np.ndarray, s: float
) -> np.ndarray | float:
    """v_s(x, ξ) = (1 + |x|² + |ξ|²)^{s/2}."""
    if s == 0:
        return 1.0
    return (1.0 + x_squared + xi_squared) ** (s / 2.0)


def _lebesgue(values: np.ndarray, p: float, weight: float) -> float:
    if math.isinf(p):
        return float(values.max(initial=0.0))
    return float((np.sum(values**p) * weight) ** (1.0 / p))


def mixed_norm(F: PhaseSpaceField, spec: MixedNormSpec) -> float:
    """Iterated quadrature of |F|·v_s in the order the flavor dictates."""
    p, q = spec.p, spec.q
    xi_squared = F.frequency.radius_squared()
    h_x = F.position.weight
    h_xi = F.frequency.weight
    position_axis = F.position.axis()

    def weighted(idx: tuple[int, ...], values: np.ndarray) -> np.ndarray:
        magnitude = np.abs(values)
        if not np.all(np.isfinite(magnitude)):
            raise DataError(f"non-finite samples in '{F.label}' at position {idx}")
        if spec.s == 0:
            return magnitude
        x_squared = float(sum(position_axis[i] ** 2 for i in idx))
        return magnitude * polynomial_weight(x_squared, xi_squared, spec.s)

    if spec.flavor == "modulation":
        accumulator = np.zeros(F.frequency.shape)
        for idx, values in F.slices():
            magnitude = weighted(idx, values)
            if math.isinf(p):
                np.maximum(accumulator, magnitude, out=accumulator)
            else:
                accumulator += magnitude**p
        inner = accumulator if math.isinf(p) else (accumulator * h_x) ** (1.0 / p)
        return _lebesgue(inner, q, h_xi)

    outer = np.array(
        [_lebesgue(weighted(idx, values), p, h_xi) for idx, values in F.slices()]
    )
    return _lebesgue(outer, q, h_x)


def default_window(f: Field, symplectic: bool = False) -> Field:
    """
    Gaussian window on f's grid.

    Standard: the L²-normalized π^{-n/4} e^{-|x|²/2}. Symplectic: e^{-|z|²}.
    """
    r2 = f.grid.radius_squared()
    if symplectic:
        return Field(f.grid, np.exp(-r2), "g")
    n = f.grid.dim
    return Field(f.grid, math.pi ** (-n / 4.0) * np.exp(-0.5 * r2), "g")


def field_norm(f: Field, spec: MixedNormSpec, window: Field | None = None) -> float:
    """Mixed norm of the (symplectic) Gabor transform of f."""
    g = window if window is not None else default_window(f, spec.symplectic)
    if spec.symplectic:
        F = symplectic_gabor(f, g)
    else:
        F = gabor_transform(f, g)
    value = mixed_norm(F, spec)
    logger.debug(f"{spec.flavor} norm ({spec.p},{spec.q},s={spec.s}) of {f.label}: {value}")
    return value


def gaussian_amalgam_norm(lam: float, p: float, q: float, d: int = 1) -> float:
    """
    Closed-form symplectic W^{p,q} norm of g_λ = e^{-λ|z|²} on R^{2d}
    with window e^{-|z|²}.
    """
    inner = 1.0 if math.isinf(p) else (math.pi / p) ** (d / p)
    outer = 1.0 if math.isinf(q) else (math.pi / q) ** (d / q)
    inv_p = 0.0 if math.isinf(p) else 1.0 / p
    inv_q = 0.0 if math.isinf(q) else 1.0 / q
    return inner * outer * (1.0 + lam) ** (d * (inv_p + inv_q - 1.0)) * lam ** (-d * inv_q)


def lebesgue_embedding_ratios(
    f: Field, p: float, window: Field | None = None
) -> tuple[float, float]:
    """
    Ratios ‖f‖_{L^p}/‖f‖_{W^{p1,p}} and ‖f‖_{W^{p2,p}}/‖f‖_{L^p} for
    p1 = min(p, p'), p2 = max(p, p'). Both stay bounded over f.
    """
    conj = math.inf if p == 1 else (1.0 if math.isinf(p) else p / (p - 1.0))
    p1, p2 = min(p, conj), max(p, conj)
    lp = quadrature_lp_norm(f, p)
    lower = field_norm(f, MixedNormSpec(p=p1, q=p, flavor="amalgam"), window)
    upper = field_norm(f, MixedNormSpec(p=p2, q=p, flavor="amalgam"), window)
    return lp / lower, upper / lp
