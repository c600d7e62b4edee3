"""
Decay-rate fits and their witnesses.

Small-time blow-up is fitted as log N(t) = c0 + s log t + c1 t, so the
leading power s is not biased by the first correction; large-time decay as
log N(t) = a - r t.
"""

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import asdict, dataclass

import numpy as np

from ..errors import DimensionError, ParameterError
from ..lattice.field import Field
from ..phasespace.norms import field_norm, gaussian_amalgam_norm
from ..schemas.grid import GridSpec
from ..schemas.norms import MixedNormSpec
from ..specfun.special_hermite import special_hermite_diagonal
from .flows import get_flow, heat_kernel
from .quadrature import subordination_rule

logger = logging.getLogger(__name__)


@dataclass
class DecayRow:
    t: float
    value: float

    def to_dict(self) -> dict:
        return asdict(self)


def _log_arrays(
    ts: Sequence[float], values: Sequence[float]
) -> tuple[np.ndarray, np.ndarray]:
    t = np.asarray(ts, dtype=float)
    v = np.asarray(values, dtype=float)
    if t.shape != v.shape or t.size < 3:
        raise ParameterError("decay fit needs at least three (t, value) pairs")
    if np.any(t <= 0) or np.any(v <= 0):
        raise ParameterError("decay fit needs positive times and values")
    if np.unique(t).size < t.size:
        raise ParameterError("decay sweep has repeated times")
    return t, np.log(v)


def fit_small_time_exponent(ts: Sequence[float], values: Sequence[float]) -> float:
    """Exponent s of N(t) ≈ C t^s as t → 0⁺."""
    t, log_v = _log_arrays(ts, values)
    design = np.column_stack([np.ones_like(t), np.log(t), t])
    coeffs, *_ = np.linalg.lstsq(design, log_v, rcond=None)
    return float(coeffs[1])


def fit_large_time_rate(ts: Sequence[float], values: Sequence[float]) -> float:
    """Rate r of N(t) ≈ C e^{-rt} as t → ∞."""
    t, log_v = _log_arrays(ts, values)
    slope, _ = np.polyfit(t, log_v, 1)
    return float(-slope)


# =============================================================================
# Witnesses
# =============================================================================


def heat_time_for_dilation(lam: float) -> float:
    """The t with p_t ∝ e^{-λ|z|²}, i.e. ¼coth(t) = λ; needs λ > 1/4."""
    if not lam > 0.25:
        raise ParameterError(f"p_t is never narrower than e^{{-|z|²/4}}, got λ={lam}")
    return math.atanh(0.25 / lam)


def heat_kernel_norm(
    t: float, spec: MixedNormSpec, d: int = 1, grid: GridSpec | None = None
) -> float:
    """
    ‖p_t‖ in the symplectic W^{p,q} norm.

    Without a grid this is the Gaussian closed form, the only option once p_t
    is narrower than any practical lattice. With a grid on R^{2d} the sampled
    p_t goes through the symplectic Gabor transform and mixed_norm.
    """
    if t <= 0:
        raise ParameterError(f"t must be > 0, got {t}")
    if grid is not None:
        if grid.dim != 2 * d:
            raise DimensionError(f"p_t for d={d} lives on R^{2 * d}, got dim {grid.dim}")
        symplectic = spec.model_copy(update={"symplectic": True})
        return field_norm(heat_kernel(t, grid), symplectic)
    lam = 0.25 / math.tanh(t)
    sinh = math.sinh(t) if t < 700.0 else math.inf
    return (16.0 * math.pi * sinh) ** (-d) * gaussian_amalgam_norm(
        lam, spec.p, spec.q, d
    )


def fractional_heat_kernel_bound(
    t: float, spec: MixedNormSpec, d: int = 1, n_nodes: int | None = None
) -> float:
    """
    ∫₀^∞ ‖p_s‖ η_t(s) ds, the subordinated bound on ‖p_t^{(1/2)}‖.

    It blows up like t^{-2d/p}, the rate of the fractional kernel itself.
    """
    rule = subordination_rule(t, n_nodes)
    rule = rule.pruned(np.exp(-d * rule.nodes))
    norms = np.array([heat_kernel_norm(float(s), spec, d) for s in rule.nodes])
    return float(np.sum(rule.weights * norms))


def decay_sweep(
    flow: str | Callable[..., Field],
    f: Field,
    ts: Sequence[float],
    spec: MixedNormSpec | None = None,
    **params,
) -> list[DecayRow]:
    """Rows (t, ‖flow_t f‖ / ‖f‖); L² unless a mixed-norm spec is given."""
    func = get_flow(flow) if isinstance(flow, str) else flow

    def norm(g: Field) -> float:
        return g.norm() if spec is None else field_norm(g, spec)

    base = norm(f)
    if base == 0:
        raise ParameterError("decay sweep on the zero field")
    rows = [DecayRow(float(t), norm(func(f, float(t), **params)) / base) for t in ts]
    logger.debug(f"Decay sweep over {len(rows)} times")
    return rows


def ground_state_sweep(
    ts: Sequence[float], grid: GridSpec, route: str = "spectral"
) -> list[DecayRow]:
    """‖e^{-tL} Φ_{0,0}‖ / ‖Φ_{0,0}‖, exactly e^{-td}."""
    d = grid.dim // 2
    ground = special_hermite_diagonal((0,) * d, grid)
    return decay_sweep("heat", ground, ts, route=route)


def heat_kernel_sweep(
    ts: Sequence[float], spec: MixedNormSpec, d: int = 1, grid: GridSpec | None = None
) -> list[DecayRow]:
    return [DecayRow(float(t), heat_kernel_norm(float(t), spec, d, grid)) for t in ts]


def fractional_heat_sweep(
    ts: Sequence[float], spec: MixedNormSpec, d: int = 1
) -> list[DecayRow]:
    return [DecayRow(float(t), fractional_heat_kernel_bound(float(t), spec, d)) for t in ts]
