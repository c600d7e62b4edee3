"""
Tests for the flows of the twisted Laplacian and their cross-checking routes.
"""

import cmath
import math

import numpy as np
import pytest

from twistlab.errors import DimensionError, ParameterError, SingularTimeError
from twistlab.lattice import relative_error
from twistlab.schemas import GridSpec
from twistlab.spectral_ops import (
    FLOW_ROUTES,
    FLOWS,
    apply_twisted_laplacian,
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
from twistlab.verification import gaussian_mixture


class TestHeatKernel:
    """p_t in closed form and as a Laguerre series."""

    @pytest.mark.parametrize("t", [0.5, 1.0])
    def test_series_matches_closed_form(self, phase_grid, t):
        closed = heat_kernel(t, phase_grid)
        series = heat_kernel_series(t, phase_grid, n_terms=64)
        assert np.max(np.abs(closed.values - series.values)) < 1e-10

    def test_peak(self, phase_grid):
        p = heat_kernel(1.0, phase_grid)
        assert p.values.max() == pytest.approx(1.0 / (16 * math.pi * math.sinh(1.0)))

    def test_needs_positive_time(self, phase_grid):
        with pytest.raises(ParameterError):
            heat_kernel(0.0, phase_grid)

    def test_needs_phase_space(self, base_grid):
        with pytest.raises(DimensionError):
            heat_kernel(1.0, base_grid)

    def test_weyl_symbol_dimension(self, phase_grid):
        with pytest.raises(DimensionError):
            heat_weyl_symbol(1.0, phase_grid)


class TestHeatFlow:
    """e^{-tL} along four routes."""

    @pytest.mark.parametrize("route", ["kernel", "weyl_symbol", "transferred"])
    def test_routes_agree(self, span_field, catalog, route):
        spectral = heat_flow(span_field, 0.5, "spectral", catalog)
        assert relative_error(heat_flow(span_field, 0.5, route, catalog), spectral) < 1e-5

    def test_basis_eigenvalue(self, catalog):
        phi = catalog.special(3, 2)
        expected = math.exp(-0.7 * 5) * phi.values
        assert relative_error(heat_flow(phi, 0.7, "transferred", catalog), expected) < 1e-6

    @pytest.mark.parametrize("t", [0.5, 1.5])
    def test_weyl_symbol_ground_state(self, catalog, t):
        phi = catalog.special(0, 0)
        result = heat_flow(phi, t, "weyl_symbol", catalog)
        assert relative_error(result, math.exp(-t) * phi.values) < 1e-5

    def test_semigroup(self, span_field, catalog):
        twice = heat_flow(heat_flow(span_field, 0.3, "spectral", catalog), 0.2, "spectral", catalog)
        assert relative_error(twice, heat_flow(span_field, 0.5, "spectral", catalog)) < 1e-8

    def test_contraction(self, span_field, catalog):
        assert heat_flow(span_field, 1.0, "spectral", catalog).norm() < span_field.norm()

    def test_time(self, span_field, catalog):
        with pytest.raises(ParameterError):
            heat_flow(span_field, -1.0, "spectral", catalog)

    def test_unknown_route(self, span_field, catalog):
        with pytest.raises(ParameterError):
            heat_flow(span_field, 1.0, "moyal", catalog)


class TestFractionalFlows:
    """e^{-tL^ν}, L^{-ν} and (I + L)^{-ν}."""

    def test_subordination(self, span_field, catalog):
        spectral = fractional_heat_flow(span_field, 1.0, 0.5, "spectral", catalog=catalog)
        subordinated = fractional_heat_flow(span_field, 1.0, 0.5, "subordination", catalog=catalog)
        assert relative_error(subordinated, spectral) < 1e-5

    def test_order_one_is_heat(self, span_field, catalog):
        fractional = fractional_heat_flow(span_field, 0.4, 1.0, catalog=catalog)
        assert relative_error(fractional, heat_flow(span_field, 0.4, "spectral", catalog)) < 1e-12

    def test_subordination_needs_half(self, span_field, catalog):
        with pytest.raises(ParameterError):
            fractional_heat_flow(span_field, 1.0, 0.3, "subordination", catalog=catalog)

    def test_order_range(self, span_field, catalog):
        with pytest.raises(ParameterError):
            fractional_heat_flow(span_field, 1.0, 1.5, catalog=catalog)
        with pytest.raises(ParameterError):
            fractional_heat_flow(span_field, 1.0, 0.0, catalog=catalog)

    def test_negative_power_inverts(self, span_field, catalog):
        recovered = negative_power(apply_twisted_laplacian(span_field), 1.0, catalog=catalog)
        assert relative_error(recovered, span_field) < 1e-5

    @pytest.mark.parametrize("potential", [negative_power, bessel_potential])
    def test_gamma_integral(self, span_field, catalog, potential):
        spectral = potential(span_field, 0.5, "spectral", catalog=catalog)
        integral = potential(span_field, 0.5, "gamma_integral", catalog=catalog)
        assert relative_error(integral, spectral) < 1e-6

    def test_bessel_basis_eigenvalue(self, catalog):
        phi = catalog.special(0, 1)
        result = bessel_potential(phi, 1.0, "transferred", catalog=catalog)
        assert relative_error(result, phi.values / 4.0) < 1e-6


class TestRieszMeans:
    """I_{u,v} = u v^{-u} ∫₀^v (v - t)^{u-1} e^{-itL} dt."""

    @pytest.mark.parametrize("u, v", [(1.0, 1.0), (1.5, 2.0), (0.5, 0.5)])
    def test_multiplier_at_zero(self, u, v):
        assert abs(riesz_multiplier(0.0, u, v) - 1.0) < 1e-10

    @pytest.mark.parametrize("x", [1.0, 3.0, 7.0])
    def test_multiplier_first_order(self, x):
        v = 1.3
        expected = (1 - cmath.exp(-1j * v * x)) / (1j * v * x)
        assert abs(riesz_multiplier(x, 1.0, v) - expected) < 1e-10

    def test_time_integral(self, span_field, catalog):
        spectral = riesz_mean(span_field, 1.5, 1.0, "spectral", catalog)
        integral = riesz_mean(span_field, 1.5, 1.0, "time_integral", catalog)
        assert relative_error(integral, spectral) < 1e-8

    def test_order(self, span_field, catalog):
        with pytest.raises(ParameterError):
            riesz_mean(span_field, 0.0, 1.0, catalog=catalog)


# =============================================================================
# Schrödinger and wave flows
# =============================================================================


class TestSchrodinger:
    """e^{-itL} is unitary with period 2π."""

    def test_unitary(self, span_field, catalog):
        evolved = schrodinger_flow(span_field, 0.9, "spectral", catalog)
        assert evolved.norm() == pytest.approx(span_field.norm(), rel=1e-6)

    def test_period(self, span_field, catalog):
        full = schrodinger_flow(span_field, 2 * math.pi, "spectral", catalog)
        half = schrodinger_flow(span_field, math.pi, "spectral", catalog)
        assert relative_error(full, span_field) < 1e-6
        assert relative_error(half, -span_field.values) < 1e-6

    def test_transferred(self, span_field, catalog):
        spectral = schrodinger_flow(span_field, 0.7, "spectral", catalog)
        assert relative_error(schrodinger_flow(span_field, 0.7, "transferred", catalog), spectral) < 1e-6

    def test_kernel_route_modulus(self, phase_grid):
        f = gaussian_mixture(phase_grid, seed=5)
        spectral = schrodinger_flow(f, 0.7, "spectral")
        kernel = schrodinger_flow(f, 0.7, "kernel")
        assert relative_error(np.abs(kernel.values), np.abs(spectral.values)) < 1e-5

    @pytest.mark.parametrize("t", [math.pi, 2 * math.pi, -math.pi])
    def test_singular_kernel(self, phase_grid, t):
        with pytest.raises(SingularTimeError):
            schrodinger_kernel(t, phase_grid)

    def test_kernel_modulus(self, phase_grid):
        q = schrodinger_kernel(1.0, phase_grid)
        assert np.allclose(np.abs(q.values), 1.0 / (16 * math.pi * math.sin(1.0)))

    def test_unknown_route(self, span_field, catalog):
        with pytest.raises(ParameterError):
            schrodinger_flow(span_field, 1.0, "weyl_symbol", catalog)


class TestOscillatingMultiplier:
    """m_t(x) = x^{-δ/2} e^{itx^{γ/2}}."""

    def test_quadratic_is_backward_schrodinger(self, span_field, catalog):
        oscillating = oscillating_multiplier(span_field, 0.7, 2.0, 0.0, catalog=catalog)
        backward = schrodinger_flow(span_field, -0.7, "spectral", catalog)
        assert relative_error(oscillating, backward) < 1e-12

    @pytest.mark.parametrize("n", [0, 2, 5])
    def test_hermite(self, catalog, n):
        h = catalog.hermite(n)
        result = oscillating_multiplier(h, 0.3, which="hermite", gamma=2.0, catalog=catalog)
        expected = cmath.exp(0.3j * (2 * n + 1)) * h.values
        assert relative_error(result, expected) < 1e-10

    def test_smoothing(self, catalog):
        phi = catalog.special(1, 1)
        result = oscillating_multiplier(phi, 0.5, gamma=0.0, delta=2.0, catalog=catalog)
        expected = cmath.exp(0.5j) * phi.values / 3.0
        assert relative_error(result, expected) < 1e-6

    def test_time(self, span_field, catalog):
        with pytest.raises(ParameterError):
            oscillating_multiplier(span_field, 0.0, catalog=catalog)

    def test_gamma_range(self, span_field, catalog):
        with pytest.raises(ParameterError):
            oscillating_multiplier(span_field, 1.0, gamma=3.0, catalog=catalog)


class TestWave:
    """u(t) = cos(t√L) f + L^{-1/2} sin(t√L) g."""

    def test_initial_value(self, span_field, catalog):
        assert relative_error(wave_flow(span_field, t=0.0, catalog=catalog), span_field) < 1e-6

    @pytest.mark.parametrize("n", [0, 3])
    def test_hermite(self, catalog, n):
        h = catalog.hermite(n)
        result = wave_flow(h, t=1.2, which="hermite", catalog=catalog)
        assert relative_error(result, math.cos(1.2 * math.sqrt(2 * n + 1)) * h.values) < 1e-10

    def test_initial_velocity(self, catalog):
        """A small step from rest travels t·g."""
        phi = catalog.special(0, 0)
        zero = phi * 0.0
        result = wave_flow(zero, phi, t=1e-4, catalog=catalog)
        assert relative_error(result, 1e-4 * phi.values) < 1e-6

    def test_hermite_has_no_transferred_route(self, catalog):
        with pytest.raises(ParameterError):
            wave_flow(catalog.hermite(0), t=1.0, which="hermite", route="transferred", catalog=catalog)


# =============================================================================
# Registry
# =============================================================================


class TestFlowRegistry:
    def test_routes_cover_flows(self):
        assert set(FLOW_ROUTES) == set(FLOWS)
        assert all(routes[0] == "spectral" for routes in FLOW_ROUTES.values())

    def test_get_flow(self):
        assert get_flow("heat") is heat_flow
        with pytest.raises(ParameterError):
            get_flow("diffusion")

    def test_run_flows_keeps_order(self, span_field, catalog):
        fields = [span_field, span_field * 2.0, span_field * 3.0]
        results = run_flows(fields, "heat", workers=2, t=0.5, route="spectral", catalog=catalog)
        reference = heat_flow(span_field, 0.5, "spectral", catalog)
        for scale, result in zip((1.0, 2.0, 3.0), results, strict=True):
            assert relative_error(result, scale * reference.values) < 1e-12

    def test_run_flows_small_grid(self):
        grid = GridSpec.self_dual(2, 32)
        fields = [gaussian_mixture(grid, seed=s) for s in range(2)]
        results = run_flows(fields, heat_flow, workers=1, t=1.0, route="kernel")
        assert [r.grid for r in results] == [grid, grid]
