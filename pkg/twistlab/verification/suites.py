"""
Built-in verification suites.

Each suite takes a RunConfig, builds its own grids and returns one
CheckResult per identity. Grids come from the config where the identity is
cheap; oracle comparisons that cost O(N^{4d}) run on fixed small grids.
"""

import itertools
import logging
import math

import numpy as np

from ..data.defaults import WINDOW_MARGIN
from ..lattice.field import Field, relative_error, tensor
from ..lattice.fourier import fourier, symplectic_fourier
from ..lattice.kernel_transform import function_to_kernel, kernel_to_function
from ..phasespace.indices import (
    weyl_product_admissible,
    weyl_product_admissible_restated,
)
from ..phasespace.norms import mixed_norm
from ..phasespace.transforms import gabor_transform, symplectic_gabor
from ..schemas.config import RunConfig
from ..schemas.grid import GridSpec
from ..schemas.norms import MixedNormSpec
from ..specfun.growth import fit_growth_exponent, m1_norm_growth_table
from ..specfun.hermite import indices_up_to
from ..specfun.special_hermite import gaussian_dilated
from ..spectral_ops.decay import (
    fit_large_time_rate,
    fit_small_time_exponent,
    fractional_heat_sweep,
    ground_state_sweep,
    heat_kernel_norm,
    heat_kernel_sweep,
    heat_time_for_dilation,
)
from ..spectral_ops.flows import (
    fractional_heat_flow,
    heat_flow,
    heat_kernel,
    heat_kernel_series,
    schrodinger_flow,
    wave_flow,
)
from ..spectral_ops.metaplectic import landau_symplectic_matrix, metaplectic_AJ
from ..spectral_ops.multipliers import (
    MultiplierSpec,
    multiplier_apply,
    transferred_multiplier,
)
from ..spectral_ops.operators import apply_hermite_operator, apply_twisted_laplacian
from ..spectral_ops.projections import resolve_catalog
from ..spectral_ops.quadrature import gamma_identity, subordination_identity
from ..twisted.convolution import CONVENTIONS, twisted_convolution, twisted_convolution_direct
from ..twisted.weyl import weyl_product
from .fields import gaussian_mixture, hermite_tensor_mixture
from .registry import CheckResult, VerificationRegistry, check

logger = logging.getLogger(__name__)

# Lattice points per axis for the sampled-symbol heat route
SYMBOL_ROUTE_POINTS = 64

EXPONENT_GRID = (1.0, 4.0 / 3.0, 2.0, 4.0, math.inf)


def _phase_order(grid: GridSpec, cap: int) -> int:
    """Largest |α|, |β| ≤ cap with Φ_{α,β} resolved on the phase-space lattice."""
    d = grid.dim // 2
    reach = min(grid.half_width, math.pi / grid.spacing) - WINDOW_MARGIN
    order = 0
    # Φ_{α,β} reaches |z| = 2√(d + |α| + |β|)
    while order < cap and 2.0 * math.sqrt(d + 2.0 * (order + 1)) <= reach:
        order += 1
    return order


def _catalog(config: RunConfig):
    return resolve_catalog(config.base_grid(), config.resolved_truncation)


def _oracle_grid(d: int) -> GridSpec:
    return GridSpec.self_dual(2 * d, 32 if d == 1 else 16)


# =============================================================================
# Eigenrelations and the product identity
# =============================================================================


def eigen_suite(config: RunConfig) -> list[CheckResult]:
    """HΦ_α = (d+2|α|)Φ_α, LΦ_{α,β} = (d+2|β|)Φ_{α,β}, H Φ_{α,β} on R^{2d}."""
    d = config.dim
    tol = config.tolerance("eigen")
    catalog = _catalog(config)
    order = _phase_order(catalog.phase_grid, 6)

    hermite = max(
        relative_error(
            apply_hermite_operator(catalog.hermite(a)),
            (d + 2 * a.order) * catalog.hermite(a).values,
        )
        for a in indices_up_to(d, min(6, catalog.k_max))
    )
    landau = 0.0
    phase = 0.0
    for alpha in indices_up_to(d, order):
        for beta in indices_up_to(d, order):
            phi = catalog.special(alpha, beta)
            landau = max(
                landau,
                relative_error(apply_twisted_laplacian(phi), (d + 2 * beta.order) * phi.values),
            )
            phase = max(
                phase,
                relative_error(
                    apply_hermite_operator(phi, scale=0.25),
                    (d + alpha.order + beta.order) * phi.values,
                ),
            )
    detail = f"|α|,|β| ≤ {order} on {catalog.phase_grid.points} points"
    return [
        check("hermite", hermite, tol, f"|α| ≤ {min(6, catalog.k_max)}"),
        check("twisted_laplacian", landau, tol, detail),
        check("phase_space_hermite", phase, tol, detail),
    ]


def twisted_algebra_suite(config: RunConfig) -> list[CheckResult]:
    """Φ_{α,β}×Φ_{μ,ν} = (32π)^{d/2} δ_{β,μ} Φ_{α,ν}, plus the direct-sum oracle."""
    d = config.dim
    catalog = _catalog(config)
    order = _phase_order(catalog.phase_grid, 4 if d == 1 else 1)
    indices = indices_up_to(d, order)
    beta_conv, base = CONVENTIONS["landau"]
    constant = (32.0 * math.pi) ** (d / 2.0)

    # one kernel per Φ, one matrix product per pair
    kernels = {
        (a, b): function_to_kernel(catalog.special(a, b), beta_conv)
        for a in indices
        for b in indices
    }
    worst = 0.0
    for (a, b), (m, n) in itertools.product(kernels, repeat=2):
        product = kernel_to_function(kernels[a, b].compose(kernels[m, n]), beta_conv)
        values = product.values * base**d
        if b == m:
            values = values - constant * catalog.special(a, n).values
        diff = Field(catalog.phase_grid, values)
        worst = max(worst, diff.norm() / constant)

    grid = _oracle_grid(d)
    left = gaussian_dilated(0.5, grid)
    right = gaussian_mixture(grid, seed=7, widths=(0.8, 1.2), spread=0.5)
    fast = twisted_convolution(left, right)
    N = grid.points
    points = [(N // 2,) * (2 * d), (N // 2 + 1,) + (N // 2 - 2,) * (2 * d - 1)]
    points.append((N // 2 - 3,) + (N // 2 + 2,) * (2 * d - 1))
    direct = twisted_convolution_direct(left, right, points)
    fast_at = np.array([fast.values[p] for p in points])
    oracle = float(np.max(np.abs(fast_at - direct)) / np.max(np.abs(direct)))

    checks = [
        check("product_identity", worst, config.tolerance("twisted_algebra"), f"indices ≤ {order}"),
        check("direct_sum_oracle", oracle, config.tolerance("oracle"), f"N={N}"),
    ]
    if d == 1:
        weyl = GridSpec.self_dual(2, 64, 0.25)
        g = gaussian_dilated(1.0, weyl)
        expected = 0.5 * gaussian_dilated(1.0, weyl).values
        for route in ("kernel", "twisted"):
            checks.append(
                check(
                    f"weyl_product_{route}",
                    relative_error(weyl_product(g, g, route=route), expected),
                    config.tolerance("route_agreement"),
                    "e^{-|z|²} # e^{-|z|²} = e^{-|z|²}/2",
                )
            )
    return checks


# =============================================================================
# Heat
# =============================================================================


def heat_routes_suite(config: RunConfig) -> list[CheckResult]:
    """Heat routes against the spectral route, semigroup law, ground-state decay."""
    d = config.dim
    grid = config.phase_grid()
    catalog = _catalog(config)
    tol = config.tolerance("route_agreement")
    f = gaussian_mixture(grid, seed=1)
    t = 0.5

    reference = heat_flow(f, t, "spectral", catalog)
    checks = [
        check(f"{route}_vs_spectral", relative_error(heat_flow(f, t, route, catalog), reference), tol, f"t={t}")
        for route in ("kernel", "transferred")
    ]
    if d == 1:
        # Θ_t is sampled on R^4, so this route runs on its own 64-point lattice
        small = GridSpec.self_dual(2, SYMBOL_ROUTE_POINTS)
        g = gaussian_mixture(small, seed=1)
        sampled = heat_flow(g, t, "weyl_symbol")
        checks.append(
            check(
                "weyl_symbol_vs_spectral",
                relative_error(sampled, heat_flow(g, t, "spectral")),
                tol,
                f"t={t}, N={SYMBOL_ROUTE_POINTS}",
            )
        )

    twice = heat_flow(heat_flow(f, 0.3, "spectral", catalog), 0.2, "spectral", catalog)
    checks.append(check("semigroup", relative_error(twice, reference), tol, "0.3 + 0.2"))

    ts = [1.0, 2.0, 4.0]
    rows = ground_state_sweep(ts, grid)
    sharp = max(abs(r.value / math.exp(-r.t * d) - 1.0) for r in rows)
    checks.append(check("ground_state_decay", sharp, config.tolerance("sharpness"), "t ∈ {1, 2, 4}"))
    rate = fit_large_time_rate(ts, [r.value for r in rows])
    checks.append(check("large_time_rate", abs(rate - d), config.tolerance("rate"), f"rate {rate:.6f}"))
    return checks


def heat_kernel_suite(config: RunConfig) -> list[CheckResult]:
    """Laguerre series of p_t and the small-time slopes of ‖p_t‖_{W^{p,q}}."""
    d = config.dim
    grid = config.phase_grid()
    series = 0.0
    for t in (0.5, 1.0, 2.0):
        diff = heat_kernel_series(t, grid, n_terms=64).values - heat_kernel(t, grid).values
        series = max(series, float(np.max(np.abs(diff))))
    checks = [check("laguerre_series", series, config.tolerance("heat_series"), "K=64")]

    ts = np.logspace(-3, -1, 20)
    for p, q in ((1.0, 1.0), (2.0, 1.0), (1.0, 2.0)):
        rows = heat_kernel_sweep(ts, MixedNormSpec(p=p, q=q), d)
        slope = fit_small_time_exponent(ts, [r.value for r in rows])
        expected = -d / p
        checks.append(
            check(
                f"small_time_slope_p{p:g}_q{q:g}",
                abs(slope - expected) / abs(expected),
                config.tolerance("slope"),
                f"slope {slope:.4f}, expected {expected:g}",
            )
        )
    if d == 1:
        # p_t ∝ g_λ for λ ∈ {1, 2, 4} is still resolved on a 48-point lattice
        sampled = GridSpec(dim=2, points=48, half_width=6.0)
        spec = MixedNormSpec(p=1.0, q=1.0, flavor="amalgam")
        times = [heat_time_for_dilation(lam) for lam in (1.0, 2.0, 4.0)]
        numeric = [heat_kernel_norm(t, spec, d, sampled) for t in times]
        closed = [heat_kernel_norm(t, spec, d) for t in times]
        drift = max(
            abs((n / numeric[0]) / (c / closed[0]) - 1.0)
            for n, c in zip(numeric, closed, strict=True)
        )
        checks.append(
            check(
                "sampled_dilation_ratios",
                drift,
                config.tolerance("dilation_ratio"),
                "λ ∈ {1, 2, 4}, N=48",
            )
        )
    return checks


def subordination_suite(config: RunConfig) -> list[CheckResult]:
    """Subordination and Gamma identities, fractional heat routes and slope."""
    d = config.dim
    identity = max(
        abs(subordination_identity(u, t) - math.exp(-t * math.sqrt(u)))
        for u in (1.0, 3.0, 10.0)
        for t in (0.5, 1.0, 2.0)
    )
    gamma = max(
        abs(gamma_identity(u, nu) * u**nu - 1.0)
        for u in (1.0, 3.0, 10.0)
        for nu in (0.3, 0.7)
    )
    checks = [
        check("subordination_identity", identity, config.tolerance("subordination")),
        check("gamma_identity", gamma, config.tolerance("subordination")),
    ]

    catalog = _catalog(config)
    f = gaussian_mixture(config.phase_grid(), seed=2)
    spectral = fractional_heat_flow(f, 1.0, 0.5, "spectral", catalog=catalog)
    subordinated = fractional_heat_flow(f, 1.0, 0.5, "subordination", catalog=catalog)
    checks.append(
        check(
            "fractional_routes",
            relative_error(subordinated, spectral),
            config.tolerance("route_agreement"),
            "t=1, ν=1/2",
        )
    )

    ts = np.logspace(-3, -1, 20)
    spec = MixedNormSpec(p=1.0, q=1.0)
    rows = fractional_heat_sweep(ts, spec, d)
    slope = fit_small_time_exponent(ts, [r.value for r in rows])
    expected = -2.0 * d / spec.p
    checks.append(
        check(
            "fractional_small_time_slope",
            abs(slope - expected) / abs(expected),
            config.tolerance("fractional_slope"),
            f"slope {slope:.4f}, expected {expected:g}",
        )
    )
    return checks


# =============================================================================
# Metaplectic transference
# =============================================================================


def intertwine_suite(config: RunConfig) -> list[CheckResult]:
    """A_J(Φ_α⊗Φ_β) = Φ_{α,β}, unitarity, L A_J = A_J(I⊗H), m(L) A_J = A_J(I⊗m(H))."""
    d = config.dim
    catalog = _catalog(config)
    order = _phase_order(catalog.phase_grid, 6)
    basis = 0.0
    for alpha in indices_up_to(d, order):
        for beta in indices_up_to(d, order):
            image = metaplectic_AJ(tensor(catalog.hermite(alpha), catalog.hermite(beta)))
            basis = max(basis, relative_error(image, catalog.special(alpha, beta)))
    checks = [check("basis_image", basis, config.tolerance("intertwine"), f"|α|,|β| ≤ {order}")]

    f = gaussian_mixture(config.phase_grid(), seed=3)
    image = metaplectic_AJ(f)
    checks.append(check("isometry", abs(image.norm() / f.norm() - 1.0), config.tolerance("unitarity")))
    back = metaplectic_AJ(image, adjoint=True)
    checks.append(check("adjoint_inverse", relative_error(back, f), config.tolerance("intertwine")))

    low = min(3, order)
    g, hg = hermite_tensor_mixture(catalog, seed=4, order=low)
    checks.append(
        check(
            "landau_intertwining",
            relative_error(apply_twisted_laplacian(metaplectic_AJ(g)), metaplectic_AJ(hg)),
            config.tolerance("eigen"),
            f"tensor mixture of order {low}",
        )
    )

    K = catalog.k_max
    multipliers = [
        MultiplierSpec.from_function(lambda x: math.exp(-x), d, K, "e^(-x)"),
        MultiplierSpec.from_function(lambda x: x**-0.5, d, K, "x^(-1/2)"),
        MultiplierSpec.from_function(
            lambda x: x**-0.5 * complex(math.cos(x**0.5), math.sin(x**0.5)),
            d,
            K,
            "x^(-1/2) e^(i x^(1/2))",
        ),
    ]
    tol = config.tolerance("route_agreement")
    for m in multipliers:
        direct = multiplier_apply(f, m, "landau", catalog)
        transferred = transferred_multiplier(f, m, catalog)
        checks.append(check(f"transferred {m.description}", relative_error(transferred, direct), tol))
    return checks


# =============================================================================
# Index logic
# =============================================================================


def index_logic_suite(config: RunConfig) -> list[CheckResult]:
    """Both forms of the Weyl-product condition over the full exponent lattice."""
    mismatches = 0
    violations = 0
    admissible = 0
    for t in itertools.product(EXPONENT_GRID, repeat=6):
        ok = weyl_product_admissible(t)
        if ok != weyl_product_admissible_restated(t):
            mismatches += 1
        if ok:
            admissible += 1
            if t[5] < max(t[1], t[3]):
                violations += 1
    detail = f"{len(EXPONENT_GRID) ** 6} tuples, {admissible} admissible"
    return [
        check("forms_agree", mismatches, 0.0, detail),
        check("q2_dominates", violations, 0.0, detail),
    ]


# =============================================================================
# Schrödinger and wave
# =============================================================================


def schrodinger_wave_suite(config: RunConfig) -> list[CheckResult]:
    """Unitarity, kernel route modulus, periodicity and the wave equation."""
    d = config.dim
    catalog = _catalog(config)
    f = gaussian_mixture(config.phase_grid(), seed=5)
    tol = config.tolerance("unitarity")

    unitarity = max(
        abs(schrodinger_flow(f, t, catalog=catalog).norm() / f.norm() - 1.0)
        for t in (0.3, 0.7, 1.5)
    )
    checks = [check("unitarity", unitarity, tol, "t ∈ {0.3, 0.7, 1.5}")]
    period = schrodinger_flow(f, 2.0 * math.pi, catalog=catalog)
    checks.append(check("period_2pi", relative_error(period, f), tol))

    if d == 1:
        small = GridSpec.self_dual(2, 64)
        h = gaussian_mixture(small, seed=5)
        kernel = schrodinger_flow(h, 0.7, "kernel")
        spectral = schrodinger_flow(h, 0.7, "spectral")
        checks.append(
            check(
                "kernel_modulus",
                relative_error(np.abs(kernel.values), np.abs(spectral.values)),
                config.tolerance("route_agreement"),
                "t=0.7, N=64",
            )
        )

    g = gaussian_mixture(config.phase_grid(), seed=6)
    t, tau = 1.0, 1e-4
    u = wave_flow(f, g, t, catalog=catalog)
    plus = wave_flow(f, g, t + tau, catalog=catalog)
    minus = wave_flow(f, g, t - tau, catalog=catalog)
    second = (plus.values - 2.0 * u.values + minus.values) / tau**2
    lu = apply_twisted_laplacian(u)
    checks.append(
        check(
            "dalembert",
            float(np.linalg.norm(second + lu.values) / np.linalg.norm(lu.values)),
            config.tolerance("route_agreement"),
            f"t={t}, τ={tau}",
        )
    )
    velocity = (
        wave_flow(f, g, tau, catalog=catalog).values
        - wave_flow(f, g, -tau, catalog=catalog).values
    ) / (2.0 * tau)
    checks.append(
        check("initial_velocity", relative_error(velocity, g), config.tolerance("route_agreement"))
    )
    return checks


# =============================================================================
# Landau matrix, growth, transforms
# =============================================================================


def landau_matrix_suite(config: RunConfig) -> list[CheckResult]:
    """Closed form of L_t against expm, and its singular-value structure."""
    d = config.dim
    checks = []
    for t in (0.1, 1.0, 5.0):
        closed, sv = landau_symplectic_matrix(t, d, "closed")
        oracle, _ = landau_symplectic_matrix(t, d, "expm")
        top, bottom = sv[: 2 * d], sv[2 * d :]
        structure = max(
            float(np.ptp(top)),
            float(np.ptp(bottom)),
            abs(float(top[0] * bottom[0]) - 1.0),
        )
        tol = config.tolerance("landau_matrix")
        checks.append(check(f"expm_t{t:g}", float(np.max(np.abs(closed - oracle))), tol))
        checks.append(
            check(f"singular_values_t{t:g}", structure, tol, f"{top[0]:.6g}, {bottom[0]:.6g}")
        )
    return checks


def growth_suite(config: RunConfig) -> list[CheckResult]:
    """M¹ growth exponent of Φ_β in d=1 over k ∈ [8, 32]."""
    rows = m1_norm_growth_table(32, d=1)
    slope = fit_growth_exponent(rows, (8, 32))
    return [check("m1_growth_exponent", abs(slope - 0.5), config.tolerance("growth"), f"slope {slope:.4f}")]


def transforms_suite(config: RunConfig) -> list[CheckResult]:
    """Parseval, F_σ² = I and the Moyal identities."""
    d = config.dim
    tol = config.tolerance("unitarity")
    base = config.base_grid()
    phase = config.phase_grid()

    f = gaussian_mixture(phase, seed=8)
    checks = [
        check("parseval", abs(fourier(f).norm() / f.norm() - 1.0), tol),
        check("symplectic_involution", relative_error(symplectic_fourier(symplectic_fourier(f)), f), tol),
    ]

    spec = MixedNormSpec(p=2.0, q=2.0)
    moyal = 0.0
    for seed in range(3):
        u = gaussian_mixture(base, seed=10 + seed)
        w = gaussian_mixture(base, seed=20 + seed, n_terms=1, widths=(0.4, 0.6))
        value = mixed_norm(gabor_transform(u, w), spec)
        moyal = max(moyal, abs(value / (u.norm() * w.norm()) - 1.0))
    checks.append(check("moyal", moyal, tol, "3 pairs"))

    if d == 1:
        small = _oracle_grid(1)
        u = gaussian_mixture(small, seed=30, widths=(0.8, 1.2))
        w = gaussian_dilated(1.0, small)
        value = mixed_norm(symplectic_gabor(u, w), spec)
        checks.append(
            check("symplectic_moyal", abs(value / (u.norm() * w.norm()) - 1.0), tol, "N=32")
        )
    return checks


BUILTIN_SUITES = {
    "eigen": (eigen_suite, "Eigenrelations of H, L and the phase-space H"),
    "twisted-algebra": (twisted_algebra_suite, "Special Hermite product identity and oracles"),
    "heat-routes": (heat_routes_suite, "Heat flow routes, semigroup law, sharp decay"),
    "heat-kernel": (heat_kernel_suite, "Laguerre series of p_t, small-time slopes"),
    "subordination": (subordination_suite, "Subordination, Gamma integrals, fractional heat"),
    "intertwine": (intertwine_suite, "Metaplectic intertwiner A_J and transferred multipliers"),
    "index-logic": (index_logic_suite, "Weyl product admissibility forms"),
    "schrodinger-wave": (schrodinger_wave_suite, "Schrödinger unitarity, kernel route, wave equation"),
    "landau-matrix": (landau_matrix_suite, "Landau symplectic matrix L_t"),
    "growth": (growth_suite, "M¹ growth of Hermite functions"),
    "transforms": (transforms_suite, "Fourier, symplectic Fourier and Moyal identities"),
}


def register_builtin_suites(registry: VerificationRegistry) -> None:
    for name, (func, description) in BUILTIN_SUITES.items():
        registry.register(name, func, description)
