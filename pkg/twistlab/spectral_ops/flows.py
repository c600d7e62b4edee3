"""
Flows of the twisted Laplacian L (and of H) with cross-checking routes.

Every flow is a spectral multiplier. The `spectral` route sums it over the
Landau levels, `transferred` applies it to the second block after A_J*, and
the remaining routes are independent: heat through the closed-form kernel
p_t or lattice samples of the Weyl symbol Θ_t, Schrödinger through the chirp
kernel q_t, and the integral representations (subordination, Gamma integrals,
Riesz means) by quadrature over the heat or Schrödinger semigroup.
"""

import logging
import math
from collections.abc import Callable, Sequence
from typing import Literal

import numpy as np
from pydantic import ValidationError
from scipy.integrate import quad
from scipy.special import roots_jacobi

from ..data.defaults import QUADRATURE_DEFAULTS
from ..errors import DimensionError, ParameterError, SingularTimeError
from ..lattice.field import Field
from ..lattice.grid import require_phase_space
from ..lattice.parallel import ordered_map
from ..schemas.flows import FlowParams
from ..schemas.grid import GridSpec
from ..specfun.catalog import BasisCatalog
from ..specfun.laguerre import laguerre_table
from ..twisted.convolution import chirp_twisted_convolution, twisted_convolution
from ..twisted.symbols import HeatSymbol
from ..twisted.weyl import sampled_weyl_apply
from .metaplectic import metaplectic_AJ
from .multipliers import MultiplierSpec, multiplier_apply, transferred_multiplier
from .projections import _orders, resolve_catalog, second_block_hermite
from .quadrature import QuadratureRule, gamma_rule, subordination_rule

logger = logging.getLogger(__name__)

Operator = Literal["hermite", "landau"]

SMALL_TIME = 1e-6


def _params(**values) -> FlowParams:
    try:
        return FlowParams(**values)
    except ValidationError as e:
        raise ParameterError(str(e)) from e


def _require_positive_time(t: float, what: str) -> None:
    if not t > 0:
        raise ParameterError(f"{what} needs t > 0, got {t}")


def _apply_spectral(
    f: Field,
    func: Callable[[float], complex],
    description: str,
    which: Operator = "landau",
    route: str = "spectral",
    catalog: BasisCatalog | None = None,
    tolerance: float | None = None,
) -> Field:
    """Apply func(L) or func(H) through the spectral or transferred route."""
    if which == "landau":
        d = require_phase_space(f.grid)
        base = f.grid.half()
    elif which == "hermite":
        d = f.grid.dim
        base = f.grid
        if route == "transferred":
            raise ParameterError("the transferred route applies to L only")
    else:
        raise ParameterError(f"unknown operator '{which}' (expected hermite or landau)")
    catalog = resolve_catalog(base, None, catalog)
    m = MultiplierSpec.from_function(func, d, catalog.k_max, description)
    if route == "spectral":
        return multiplier_apply(f, m, which, catalog, tolerance)
    if route == "transferred":
        return transferred_multiplier(f, m, catalog, tolerance)
    raise ParameterError(f"route '{route}' is not a multiplier route")


def _semigroup_integral(
    f: Field,
    rule: QuadratureRule,
    route: str,
    catalog: BasisCatalog | None,
) -> np.ndarray:
    """Σ_k w_k e^{-s_k L} f, with nodes pruned against the envelope e^{-sd}."""
    d = require_phase_space(f.grid)
    rule = rule.pruned(np.exp(-rule.nodes * d))
    logger.debug(f"Semigroup quadrature over {len(rule)} nodes, inner route {route}")
    if route == "transferred":
        # A_J is linear, so the node sum is taken on the second-block expansion
        catalog = resolve_catalog(f.grid.half(), None, catalog)
        indices, B, _ = second_block_hermite(f, catalog)
        _, H = catalog.hermite_matrix()
        levels = d + 2.0 * _orders(indices)
        factors = np.exp(-np.multiply.outer(rule.nodes, levels)).T @ rule.weights
        tensor = Field(f.grid, (B * factors[None, :]) @ H.T)
        return metaplectic_AJ(tensor).values
    total = np.zeros(f.grid.shape, dtype=np.complex128)
    for s, w in zip(rule.nodes, rule.weights, strict=True):
        total += w * heat_flow(f, float(s), route, catalog).values
    return total


# =============================================================================
# Heat
# =============================================================================


def heat_kernel(t: float, grid: GridSpec) -> Field:
    """p_t(z) = (16π sinh t)^{-d} e^{-¼ coth(t)|z|²}."""
    d = require_phase_space(grid)
    _require_positive_time(t, "heat kernel")
    if t < SMALL_TIME:
        logger.warning(f"t={t:g}: coth(t) blows up, p_t is unresolved on any practical grid")
    elif 2.0 * math.sqrt(math.tanh(t)) < grid.spacing:
        logger.warning(
            f"t={t:g}: p_t is narrower than the lattice spacing {grid.spacing:.3g}"
        )
    values = (16.0 * math.pi * math.sinh(t)) ** (-d) * np.exp(
        -0.25 / math.tanh(t) * grid.radius_squared()
    )
    return Field(grid, values, f"p_{t:g}")


def heat_kernel_series(t: float, grid: GridSpec, n_terms: int = 64) -> Field:
    """(8π)^{-d} Σ_{k≤n_terms} e^{-(2k+d)t} φ_k, the Laguerre expansion of p_t."""
    d = require_phase_space(grid)
    _require_positive_time(t, "heat kernel")
    r2 = grid.radius_squared()
    table = laguerre_table(n_terms, d - 1.0, 0.5 * r2)
    weights = np.exp(-(2.0 * np.arange(n_terms + 1) + d) * t)
    series = np.tensordot(weights, table, axes=1) * np.exp(-0.25 * r2)
    return Field(grid, series * (8.0 * math.pi) ** (-d), f"p_{t:g}[{n_terms}]")


def heat_weyl_symbol(t: float, grid: GridSpec) -> Field:
    """Θ_t sampled on a phase-space lattice of R^{2d} × R^{2d}."""
    if grid.dim % 4:
        raise DimensionError(f"Θ_t lives on R^{{4d}}, got dim {grid.dim}")
    return HeatSymbol(t, grid.dim // 4).sample(grid, f"Theta_{t:g}")


def heat_flow(
    f: Field,
    t: float,
    route: Literal["spectral", "kernel", "weyl_symbol", "transferred"] = "spectral",
    catalog: BasisCatalog | None = None,
    tolerance: float | None = None,
) -> Field:
    """e^{-tL} f."""
    d = require_phase_space(f.grid)
    _require_positive_time(t, "heat flow")
    if route in ("spectral", "transferred"):
        def m(x: float) -> float:
            return math.exp(-t * x)

        out = _apply_spectral(f, m, f"e^(-{t:g}x)", "landau", route, catalog, tolerance)
    elif route == "kernel":
        out = twisted_convolution(f, heat_kernel(t, f.grid), convention="landau")
    elif route == "weyl_symbol":
        out = sampled_weyl_apply(HeatSymbol(t, d), f)
    else:
        raise ParameterError(f"unknown heat route '{route}'")
    return Field(f.grid, out.values, f"e^(-{t:g}L)[{f.label}]")


def fractional_heat_flow(
    f: Field,
    t: float,
    nu: float = 0.5,
    route: Literal["spectral", "transferred", "subordination"] = "spectral",
    inner_route: str = "transferred",
    catalog: BasisCatalog | None = None,
    tolerance: float | None = None,
    n_nodes: int | None = None,
) -> Field:
    """
    e^{-tL^ν} f.

    subordination (ν = 1/2 only): ∫₀^∞ e^{-sL} f η_t(s) ds with the heat
    semigroup evaluated by `inner_route`.
    """
    _require_positive_time(t, "fractional heat flow")
    _params(t=t, nu=nu)
    if nu > 1:
        raise ParameterError(f"ν must lie in (0, 1], got {nu}")
    label = f"e^(-{t:g}L^{nu:g})[{f.label}]"
    if route == "subordination":
        if abs(nu - 0.5) > 1e-12:
            raise ParameterError("subordination has a closed-form density only for ν = 1/2")
        values = _semigroup_integral(f, subordination_rule(t, n_nodes), inner_route, catalog)
        return Field(f.grid, values, label)
    out = _apply_spectral(
        f, lambda x: math.exp(-t * x**nu), label, "landau", route, catalog, tolerance
    )
    return Field(f.grid, out.values, label)


# =============================================================================
# Negative powers, Bessel potentials, Riesz means
# =============================================================================


def negative_power(
    f: Field,
    nu: float,
    route: Literal["spectral", "transferred", "gamma_integral"] = "spectral",
    inner_route: str = "transferred",
    catalog: BasisCatalog | None = None,
    tolerance: float | None = None,
    n_nodes: int | None = None,
) -> Field:
    """L^{-ν} f; gamma_integral is Γ(ν)^{-1} ∫₀^∞ e^{-tL} f t^{ν-1} dt."""
    _params(nu=nu)
    label = f"L^-{nu:g}[{f.label}]"
    if route == "gamma_integral":
        values = _semigroup_integral(f, gamma_rule(nu, 0.0, n_nodes), inner_route, catalog)
        return Field(f.grid, values, label)
    out = _apply_spectral(f, lambda x: x**-nu, label, "landau", route, catalog, tolerance)
    return Field(f.grid, out.values, label)


def bessel_potential(
    f: Field,
    nu: float,
    route: Literal["spectral", "transferred", "gamma_integral"] = "spectral",
    inner_route: str = "transferred",
    catalog: BasisCatalog | None = None,
    tolerance: float | None = None,
    n_nodes: int | None = None,
) -> Field:
    """(I + L)^{-ν} f; gamma_integral is Γ(ν)^{-1} ∫₀^∞ e^{-t} e^{-tL} f t^{ν-1} dt."""
    _params(nu=nu)
    label = f"(I+L)^-{nu:g}[{f.label}]"
    if route == "gamma_integral":
        values = _semigroup_integral(f, gamma_rule(nu, 1.0, n_nodes), inner_route, catalog)
        return Field(f.grid, values, label)
    out = _apply_spectral(
        f, lambda x: (1.0 + x) ** -nu, label, "landau", route, catalog, tolerance
    )
    return Field(f.grid, out.values, label)


def riesz_multiplier(x: float, u: float, v: float) -> complex:
    """u v^{-u} ∫₀^v (v - t)^{u-1} e^{-itx} dt by weighted adaptive quadrature."""
    _params(u=u, v=v)
    options = dict(weight="alg", wvar=(0.0, u - 1.0), limit=200)
    re = quad(lambda t: math.cos(x * t), 0.0, v, **options)[0]
    im = quad(lambda t: -math.sin(x * t), 0.0, v, **options)[0]
    return u * v**-u * complex(re, im)


def riesz_mean(
    f: Field,
    u: float,
    v: float,
    route: Literal["spectral", "time_integral"] = "spectral",
    catalog: BasisCatalog | None = None,
    tolerance: float | None = None,
    n_nodes: int | None = None,
) -> Field:
    """
    I_{u,v} f = u v^{-u} ∫₀^v (v - t)^{u-1} e^{-itL} f dt.

    time_integral maps t = v(1 + x)/2 and uses Gauss-Jacobi nodes for the
    weight (1 - x)^{u-1}, so the endpoint factor is integrated exactly.
    """
    _params(u=u, v=v)
    label = f"I_{u:g},{v:g}[{f.label}]"
    if route == "time_integral":
        require_phase_space(f.grid)
        catalog = resolve_catalog(f.grid.half(), None, catalog)
        n = n_nodes or QUADRATURE_DEFAULTS["riesz_nodes"]
        x, w = roots_jacobi(n, u - 1.0, 0.0)
        times = 0.5 * v * (1.0 + x)
        weights = u * v**-u * (0.5 * v) ** u * w
        total = np.zeros(f.grid.shape, dtype=np.complex128)
        for t, weight in zip(times, weights, strict=True):
            total += weight * schrodinger_flow(f, float(t), "spectral", catalog).values
        return Field(f.grid, total, label)
    out = _apply_spectral(
        f, lambda x: riesz_multiplier(x, u, v), label, "landau", route, catalog, tolerance
    )
    return Field(f.grid, out.values, label)


# =============================================================================
# Schrödinger, oscillating multipliers, wave
# =============================================================================


def schrodinger_kernel(t: float, grid: GridSpec) -> Field:
    """q_t(z) = (16π sin t)^{-d} e^{(i/4) cot(t)|z|²}."""
    d = require_phase_space(grid)
    if _params(t=t).is_singular_schrodinger_time:
        raise SingularTimeError(f"t={t:g} lies in πZ, where q_t degenerates")
    values = (16.0 * math.pi * math.sin(t)) ** (-d) * np.exp(
        0.25j / math.tan(t) * grid.radius_squared()
    )
    return Field(grid, values, f"q_{t:g}")


def schrodinger_flow(
    f: Field,
    t: float,
    route: Literal["spectral", "kernel", "transferred"] = "spectral",
    catalog: BasisCatalog | None = None,
    tolerance: float | None = None,
) -> Field:
    """
    e^{-itL} f.

    The kernel route is c·(f × q_t) with the chirp of q_t factored out of the
    twisted convolution and the rest summed by chirp-z transforms; the
    unimodular c is fixed by matching the spectral route at its largest sample.
    """
    d = require_phase_space(f.grid)
    label = f"e^(-i{t:g}L)[{f.label}]"
    if route in ("spectral", "transferred"):
        def m(x: float) -> complex:
            return complex(math.cos(t * x), -math.sin(t * x))

        out = _apply_spectral(f, m, label, "landau", route, catalog, tolerance)
        return Field(f.grid, out.values, label)
    if route != "kernel":
        raise ParameterError(f"unknown Schrödinger route '{route}'")

    if _params(t=t).is_singular_schrodinger_time:
        raise SingularTimeError(f"t={t:g} lies in πZ, where q_t degenerates")
    amplitude = (16.0 * math.pi * math.sin(t)) ** (-d)
    factored = chirp_twisted_convolution(f, 1.0 / math.tan(t), amplitude).values
    reference = schrodinger_flow(f, t, "spectral", catalog, tolerance).values
    peak = np.unravel_index(np.argmax(np.abs(reference)), f.grid.shape)
    if factored[peak] == 0:
        raise ParameterError("kernel route vanishes at the reference sample")
    ratio = reference[peak] / factored[peak]
    phase = ratio / abs(ratio)
    logger.debug(f"Schrödinger t={t:g}: phase {np.angle(phase):.6f}, |ratio| {abs(ratio):.6g}")
    return Field(f.grid, factored * phase, label)


def oscillating_multiplier(
    f: Field,
    t: float,
    gamma: float = 1.0,
    delta: float = 0.0,
    which: Operator = "landau",
    route: Literal["spectral", "transferred"] = "spectral",
    catalog: BasisCatalog | None = None,
    tolerance: float | None = None,
) -> Field:
    """m_t(L) f with m_t(x) = x^{-δ/2} e^{itx^{γ/2}}; γ = 2, δ = 0 is e^{itL}."""
    _require_positive_time(t, "oscillating multiplier")
    _params(t=t, gamma=gamma, delta=delta)

    def m(x: float) -> complex:
        phase = t * x ** (0.5 * gamma)
        return x ** (-0.5 * delta) * complex(math.cos(phase), math.sin(phase))

    label = f"m_{t:g}[{f.label}]"
    out = _apply_spectral(f, m, label, which, route, catalog, tolerance)
    return Field(f.grid, out.values, label)


def wave_flow(
    f: Field,
    g: Field | None = None,
    t: float = 1.0,
    which: Operator = "landau",
    route: Literal["spectral", "transferred"] = "spectral",
    catalog: BasisCatalog | None = None,
    tolerance: float | None = None,
) -> Field:
    """u(t) = cos(t√L) f + L^{-1/2} sin(t√L) g."""
    label = f"wave_{t:g}[{f.label}]"
    out = _apply_spectral(
        f, lambda x: math.cos(t * math.sqrt(x)), label, which, route, catalog, tolerance
    )
    if g is not None:
        f.require_same_grid(g)
        velocity = _apply_spectral(
            g,
            lambda x: math.sin(t * math.sqrt(x)) / math.sqrt(x),
            label,
            which,
            route,
            catalog,
            tolerance,
        )
        out = out + velocity.values
    return Field(f.grid, out.values, label)


# =============================================================================
# Registry
# =============================================================================

FLOWS: dict[str, Callable[..., Field]] = {
    "heat": heat_flow,
    "fracheat": fractional_heat_flow,
    "schrodinger": schrodinger_flow,
    "wave": wave_flow,
    "oscmult": oscillating_multiplier,
    "negpow": negative_power,
    "bessel": bessel_potential,
    "riesz": riesz_mean,
}

FLOW_ROUTES: dict[str, tuple[str, ...]] = {
    "heat": ("spectral", "kernel", "weyl_symbol", "transferred"),
    "fracheat": ("spectral", "subordination", "transferred"),
    "schrodinger": ("spectral", "kernel", "transferred"),
    "wave": ("spectral", "transferred"),
    "oscmult": ("spectral", "transferred"),
    "negpow": ("spectral", "gamma_integral", "transferred"),
    "bessel": ("spectral", "gamma_integral", "transferred"),
    "riesz": ("spectral", "time_integral"),
}


def get_flow(name: str) -> Callable[..., Field]:
    try:
        return FLOWS[name]
    except KeyError:
        raise ParameterError(f"unknown flow '{name}' (expected one of {sorted(FLOWS)})") from None


def run_flows(
    fields: Sequence[Field],
    flow: str | Callable[..., Field],
    workers: int | None = None,
    **params,
) -> list[Field]:
    """Apply one flow to independent fields on a thread pool, in input order."""
    func = get_flow(flow) if isinstance(flow, str) else flow
    return ordered_map(lambda f: func(f, **params), fields, workers)
