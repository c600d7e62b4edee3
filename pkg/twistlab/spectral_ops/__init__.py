"""
Spectral operators: projections, multipliers, flows, the metaplectic
intertwiner A_J and the Landau symplectic matrix.
"""

from .decay import (
    DecayRow,
    decay_sweep,
    fit_large_time_rate,
    fit_small_time_exponent,
    fractional_heat_kernel_bound,
    heat_kernel_norm,
)
from .flows import (
    FLOW_ROUTES,
    FLOWS,
    bessel_potential,
    fractional_heat_flow,
    get_flow,
    heat_flow,
    heat_kernel,
    heat_kernel_series,
    heat_weyl_symbol,
    negative_power,
    oscillating_multiplier,
    riesz_mean,
    riesz_multiplier,
    run_flows,
    schrodinger_flow,
    schrodinger_kernel,
    wave_flow,
)
from .metaplectic import landau_matrix, landau_symplectic_matrix, metaplectic_AJ
from .multipliers import (
    MultiplierResult,
    MultiplierSpec,
    multiplier_apply,
    multiplier_expand,
    transferred_expand,
    transferred_multiplier,
)
from .operators import (
    apply_hermite_operator,
    apply_twisted_laplacian,
    ladder_lower,
    ladder_raise,
)
from .projections import (
    SpectralCoeffs,
    hermite_coefficients,
    landau_coefficients,
    landau_synthesis,
    project_hermite,
    project_landau,
    resolve_catalog,
)
from .quadrature import (
    exp_sinh_rule,
    gamma_identity,
    subordination_density,
    subordination_identity,
)
from .riesz import riesz_coefficient_matrix, riesz_transform

__all__ = [
    "FLOWS",
    "FLOW_ROUTES",
    "DecayRow",
    "MultiplierResult",
    "MultiplierSpec",
    "SpectralCoeffs",
    "apply_hermite_operator",
    "apply_twisted_laplacian",
    "bessel_potential",
    "decay_sweep",
    "exp_sinh_rule",
    "fit_large_time_rate",
    "fit_small_time_exponent",
    "fractional_heat_flow",
    "fractional_heat_kernel_bound",
    "gamma_identity",
    "get_flow",
    "heat_flow",
    "heat_kernel",
    "heat_kernel_norm",
    "heat_kernel_series",
    "heat_weyl_symbol",
    "hermite_coefficients",
    "ladder_lower",
    "ladder_raise",
    "landau_coefficients",
    "landau_matrix",
    "landau_symplectic_matrix",
    "landau_synthesis",
    "metaplectic_AJ",
    "multiplier_apply",
    "multiplier_expand",
    "negative_power",
    "oscillating_multiplier",
    "project_hermite",
    "project_landau",
    "resolve_catalog",
    "riesz_coefficient_matrix",
    "riesz_mean",
    "riesz_multiplier",
    "riesz_transform",
    "run_flows",
    "schrodinger_flow",
    "schrodinger_kernel",
    "subordination_density",
    "subordination_identity",
    "transferred_expand",
    "transferred_multiplier",
    "wave_flow",
]
