"""
Tests for quadrature rules, Riesz transforms and decay-rate fits.
"""

import math

import numpy as np
import pytest

from twistlab.errors import DimensionError, ParameterError
from twistlab.lattice import relative_error
from twistlab.schemas import GridSpec, MixedNormSpec
from twistlab.spectral_ops import (
    decay_sweep,
    exp_sinh_rule,
    fit_large_time_rate,
    fit_small_time_exponent,
    fractional_heat_kernel_bound,
    gamma_identity,
    heat_kernel_norm,
    riesz_coefficient_matrix,
    riesz_transform,
    subordination_density,
    subordination_identity,
)
from twistlab.spectral_ops.decay import (
    fractional_heat_sweep,
    ground_state_sweep,
    heat_kernel_sweep,
    heat_time_for_dilation,
)
from twistlab.spectral_ops.quadrature import gamma_rule

SMALL_TIMES = np.logspace(-3, -1, 20)


class TestQuadrature:
    """Rules on the half line."""

    def test_exp_sinh(self):
        rule = exp_sinh_rule()
        assert rule.integrate(lambda s: np.exp(-s)) == pytest.approx(1.0, abs=1e-10)

    def test_pruning_keeps_integral(self):
        rule = exp_sinh_rule()
        pruned = rule.pruned(np.exp(-rule.nodes))
        assert len(pruned) < len(rule)
        assert pruned.integrate(lambda s: np.exp(-s)) == pytest.approx(1.0, abs=1e-10)

    def test_invalid_rule(self):
        with pytest.raises(ParameterError):
            exp_sinh_rule(1)
        with pytest.raises(ParameterError):
            exp_sinh_rule(64, -0.1)

    @pytest.mark.parametrize("u, t", [(1.0, 1.0), (3.0, 0.5), (9.0, 2.0)])
    def test_subordination_identity(self, u, t):
        """∫₀^∞ e^{-us} η_t(s) ds = e^{-t√u}."""
        assert subordination_identity(u, t) == pytest.approx(math.exp(-t * math.sqrt(u)), abs=1e-8)

    def test_subordination_density_is_probability(self):
        rule = exp_sinh_rule()
        mass = rule.integrate(lambda s: subordination_density(s, 0.8))
        assert mass == pytest.approx(1.0, abs=1e-8)

    @pytest.mark.parametrize("u, nu", [(1.0, 0.5), (3.0, 0.3), (5.0, 1.5)])
    def test_gamma_identity(self, u, nu):
        """Γ(ν)^{-1} ∫₀^∞ e^{-yu} y^{ν-1} dy = u^{-ν}."""
        assert gamma_identity(u, nu) * u**nu == pytest.approx(1.0, abs=1e-8)

    def test_errors(self):
        with pytest.raises(ParameterError):
            subordination_density(1.0, 0.0)
        with pytest.raises(ParameterError):
            subordination_identity(-1.0, 1.0)
        with pytest.raises(ParameterError):
            gamma_rule(0.0)
        with pytest.raises(ParameterError):
            gamma_identity(0.0, 0.5)


# =============================================================================
# Riesz transforms
# =============================================================================


class TestRieszTransform:
    """R_j = A_j H^{-1/2} on the Hermite basis."""

    def test_ground_state(self, catalog):
        result = riesz_transform(catalog.hermite(0), 0, catalog)
        assert relative_error(result, math.sqrt(2) * catalog.hermite(1).values) < 1e-8

    def test_first_excited(self, catalog):
        result = riesz_transform(catalog.hermite(1), 0, catalog)
        assert relative_error(result, 2 / math.sqrt(3) * catalog.hermite(2).values) < 1e-8

    def test_matrix_entries(self):
        indices, matrix = riesz_coefficient_matrix(3)
        assert matrix.shape == (4, 4)
        assert matrix[1, 0] == pytest.approx(math.sqrt(2))
        assert matrix[2, 1] == pytest.approx(math.sqrt(4 / 3))
        assert not matrix[:, 3].any()
        assert not matrix[0].any()

    def test_matrix_matches_transform(self, catalog):
        _, matrix = riesz_coefficient_matrix(6)
        for n in range(6):
            image = riesz_transform(catalog.hermite(n), 0, catalog)
            coefficient = catalog.hermite(n + 1).inner(image)
            assert abs(coefficient) == pytest.approx(matrix[n + 1, n], rel=1e-8)

    def test_axes_in_two_dimensions(self):
        indices, matrix = riesz_coefficient_matrix(2, d=2, j=1)
        assert len(indices) == 6
        assert np.count_nonzero(matrix) == 3

    def test_axis_out_of_range(self):
        with pytest.raises(ParameterError):
            riesz_coefficient_matrix(3, d=1, j=1)


# =============================================================================
# Decay fits
# =============================================================================


class TestFits:
    """Log-linear fits of small-time blow-up and large-time decay."""

    def test_small_time_exponent(self):
        values = 3.0 * SMALL_TIMES**-1.5 * np.exp(0.2 * SMALL_TIMES)
        assert fit_small_time_exponent(SMALL_TIMES, values) == pytest.approx(-1.5, abs=1e-8)

    def test_large_time_rate(self):
        ts = np.linspace(1.0, 5.0, 9)
        assert fit_large_time_rate(ts, 2.0 * np.exp(-3.0 * ts)) == pytest.approx(3.0, abs=1e-10)

    @pytest.mark.parametrize(
        "ts, values",
        [
            ([1.0, 2.0], [1.0, 0.5]),
            ([1.0, 2.0, 3.0], [1.0, -0.5, 0.2]),
            ([1.0, 1.0, 2.0], [1.0, 0.9, 0.5]),
        ],
    )
    def test_rejected_samples(self, ts, values):
        with pytest.raises(ParameterError):
            fit_large_time_rate(ts, values)


class TestDecayWitnesses:
    """Norms of the heat kernel and the subordinated bound."""

    @pytest.mark.parametrize("p", [1.0, 2.0])
    def test_heat_kernel_slope(self, p):
        rows = heat_kernel_sweep(SMALL_TIMES, MixedNormSpec(p=p, q=1.0))
        slope = fit_small_time_exponent([r.t for r in rows], [r.value for r in rows])
        assert slope == pytest.approx(-1.0 / p, rel=0.05)

    def test_fractional_slope(self):
        rows = fractional_heat_sweep(SMALL_TIMES, MixedNormSpec(p=1.0, q=1.0))
        slope = fit_small_time_exponent([r.t for r in rows], [r.value for r in rows])
        assert slope == pytest.approx(-2.0, rel=0.1)

    def test_witnesses_decay(self):
        spec = MixedNormSpec(p=2.0, q=2.0)
        assert fractional_heat_kernel_bound(2.0, spec) > 0
        assert heat_kernel_norm(3.0, spec) < heat_kernel_norm(1.0, spec)

    def test_heat_kernel_norm_time(self):
        with pytest.raises(ParameterError):
            heat_kernel_norm(0.0, MixedNormSpec())

    @pytest.mark.parametrize("p, q", [(1.0, 1.0), (2.0, 1.0)])
    def test_sampled_norm_follows_dilation(self, p, q):
        """Sampled p_t norms scale with λ like the closed form, λ ∈ {1, 2, 4}."""
        grid = GridSpec(dim=2, points=48, half_width=6.0)
        spec = MixedNormSpec(p=p, q=q, flavor="amalgam")
        times = [heat_time_for_dilation(lam) for lam in (1.0, 2.0, 4.0)]
        numeric = [heat_kernel_norm(t, spec, 1, grid) for t in times]
        closed = [heat_kernel_norm(t, spec) for t in times]
        for n, c in zip(numeric[1:], closed[1:], strict=True):
            assert n / numeric[0] == pytest.approx(c / closed[0], rel=0.02)

    def test_heat_time_for_dilation(self):
        t = heat_time_for_dilation(2.0)
        assert 0.25 / math.tanh(t) == pytest.approx(2.0)
        with pytest.raises(ParameterError):
            heat_time_for_dilation(0.25)

    def test_sampled_norm_needs_phase_space(self, base_grid):
        with pytest.raises(DimensionError):
            heat_kernel_norm(0.5, MixedNormSpec(), 1, base_grid)

    def test_ground_state_decay(self, phase_grid):
        ts = [1.0, 2.0, 3.0, 4.0]
        rows = ground_state_sweep(ts, phase_grid)
        for row in rows:
            assert row.value == pytest.approx(math.exp(-row.t), rel=1e-10)
        assert fit_large_time_rate(ts, [r.value for r in rows]) == pytest.approx(1.0, abs=1e-3)

    def test_sweep_on_span(self, span_field, catalog):
        rows = decay_sweep("heat", span_field, [0.5, 1.0, 2.0], catalog=catalog)
        values = [r.value for r in rows]
        assert values == sorted(values, reverse=True)
        assert all(0 < v < 1 for v in values)
        assert rows[0].to_dict() == {"t": 0.5, "value": values[0]}

    def test_zero_field(self, span_field):
        with pytest.raises(ParameterError):
            decay_sweep("heat", span_field * 0.0, [1.0, 2.0])
