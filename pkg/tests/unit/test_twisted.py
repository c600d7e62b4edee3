"""
Tests for twisted convolution, registered symbols and the Weyl calculus.
"""

import math

import numpy as np
import pytest

from twistlab.errors import DimensionError, GridError, MemoryBudgetError, ParameterError
from twistlab.lattice import Field, relative_error
from twistlab.schemas import GridSpec
from twistlab.specfun import gaussian_dilated, hermite_function
from twistlab.spectral_ops import apply_twisted_laplacian, heat_flow
from twistlab.twisted import (
    ConstantSymbol,
    HeatSymbol,
    QuadraticSymbol,
    chirp_oversampling,
    chirp_twisted_convolution,
    is_registered,
    make_symbol,
    sampled_weyl_apply,
    symbol_of,
    symbol_to_kernel,
    twisted_convolution,
    twisted_convolution_direct,
    weyl_apply,
    weyl_product,
)
from twistlab.twisted.weyl import kernel_grid, sampled_symbol_kernel
from twistlab.verification import gaussian_mixture

PRODUCT_CONSTANT = math.sqrt(32 * math.pi)


class TestTwistedConvolution:
    """Landau-normalized twisted convolution."""

    @pytest.mark.parametrize("a, b, n", [(1, 0, 2), (0, 2, 1), (3, 1, 0)])
    def test_special_hermite_product(self, catalog, a, b, n):
        """Φ_{a,b} × Φ_{b,n} = (32π)^{1/2} Φ_{a,n}."""
        product = twisted_convolution(catalog.special(a, b), catalog.special(b, n))
        expected = PRODUCT_CONSTANT * catalog.special(a, n).values
        assert relative_error(product, expected) < 1e-6

    def test_orthogonal_product_vanishes(self, catalog):
        product = twisted_convolution(catalog.special(1, 0), catalog.special(2, 1))
        assert product.norm() < 1e-6 * PRODUCT_CONSTANT

    def test_direct_sum_oracle(self):
        grid = GridSpec.self_dual(2, 32)
        left = gaussian_dilated(0.5, grid)
        right = gaussian_mixture(grid, seed=7, widths=(0.8, 1.2), spread=0.5)
        fast = twisted_convolution(left, right)
        points = [(16, 16), (17, 14), (13, 18)]
        direct = twisted_convolution_direct(left, right, points)
        fast_at = np.array([fast.values[p] for p in points])
        assert np.max(np.abs(fast_at - direct)) < 1e-7 * np.max(np.abs(direct))

    def test_unknown_convention(self, mixture):
        with pytest.raises(ParameterError):
            twisted_convolution(mixture, mixture, convention="moyal")

    def test_needs_phase_space(self, base_grid):
        h0 = hermite_function(0, base_grid)
        with pytest.raises(DimensionError):
            twisted_convolution(h0, h0)

    def test_direct_point_dimension(self, mixture):
        with pytest.raises(GridError):
            twisted_convolution_direct(mixture, mixture, [(1, 2, 3)])

    def test_chirp_matches_direct_sum(self):
        grid = GridSpec.self_dual(2, 32)
        f = gaussian_mixture(grid, seed=7, widths=(0.8, 1.2), spread=0.5)
        curvature = 1.0 / math.tan(0.7)
        chirp = Field(grid, np.exp(0.25j * curvature * grid.radius_squared()))
        fast = chirp_twisted_convolution(f, curvature)
        points = [(16, 16), (17, 14), (13, 18)]
        direct = twisted_convolution_direct(f, chirp, points)
        fast_at = np.array([fast.values[p] for p in points])
        assert np.max(np.abs(fast_at - direct)) < 1e-6 * np.max(np.abs(direct))

    def test_chirp_refinement_converged(self):
        grid = GridSpec.self_dual(2, 32)
        f = gaussian_mixture(grid, seed=3, widths=(0.8, 1.2), spread=0.5)
        curvature = 1.0 / math.tan(0.7)
        assert chirp_oversampling(grid, curvature) == 2
        coarse = chirp_twisted_convolution(f, curvature, oversample=2)
        fine = chirp_twisted_convolution(f, curvature, oversample=3)
        assert relative_error(fine, coarse) < 1e-8

    def test_chirp_oversampling(self, phase_grid):
        assert chirp_oversampling(phase_grid, 0.0) == 1
        assert chirp_oversampling(phase_grid, 10.0) > chirp_oversampling(phase_grid, 1.0)

    def test_chirp_oversample_factor(self, mixture):
        with pytest.raises(ParameterError):
            chirp_twisted_convolution(mixture, 1.0, oversample=0)


# =============================================================================
# Registered symbols
# =============================================================================


class TestRegisteredSymbols:
    """Closed-form symbols and their exact quantizations."""

    def test_make_symbol(self):
        assert make_symbol("hermite", 2).kind == "hermite"
        assert make_symbol("landau", 1).kind == "landau"
        assert isinstance(make_symbol("heat", 1, t=0.5), HeatSymbol)
        with pytest.raises(ParameterError):
            make_symbol("quartic")

    def test_constant(self, mixture):
        assert relative_error(ConstantSymbol(2.0).apply(mixture), 2 * mixture.values) == 0.0

    @pytest.mark.parametrize("n", [0, 1, 4, 8])
    def test_hermite_symbol(self, base_grid, n):
        """(|x|² + |ξ|²)^w h_n = (2n+1) h_n."""
        h = hermite_function(n, base_grid)
        result = weyl_apply(QuadraticSymbol.hermite(1), h)
        assert relative_error(result, (2 * n + 1) * h.values) < 1e-8

    def test_landau_symbol_is_twisted_laplacian(self, mixture):
        result = QuadraticSymbol.landau(1).apply(mixture)
        assert relative_error(result, apply_twisted_laplacian(mixture)) < 1e-8

    def test_quadratic_shape_mismatch(self):
        with pytest.raises(ParameterError):
            QuadraticSymbol(np.eye(2), np.eye(3))

    def test_quadratic_dimension_mismatch(self, base_grid):
        with pytest.raises(ParameterError):
            QuadraticSymbol.hermite(2).apply(hermite_function(0, base_grid))

    def test_heat_symbol_samples(self):
        grid = GridSpec(dim=4, points=8, half_width=2.0)
        theta = symbol_of("heat", grid, t=0.7)
        assert theta.values[4, 4, 4, 4] == pytest.approx(1.0 / math.cosh(0.7))
        assert is_registered(theta)

    def test_heat_symbol_matches_spectral_flow(self, span_field, catalog):
        """Θ_t^w = e^{-tL}."""
        result = HeatSymbol(0.5, 1).apply(span_field)
        reference = heat_flow(span_field, 0.5, "spectral", catalog)
        assert relative_error(result, reference) < 1e-5

    def test_heat_symbol_time(self):
        with pytest.raises(ParameterError):
            HeatSymbol(0.0)

    def test_is_registered(self, mixture, phase_grid):
        assert is_registered(QuadraticSymbol.hermite(1))
        assert is_registered(symbol_of("hermite", phase_grid))
        assert not is_registered(mixture)


# =============================================================================
# Weyl calculus
# =============================================================================


class TestWeyl:
    """Weyl products and sampled symbols."""

    @pytest.mark.parametrize("route", ["kernel", "twisted"])
    def test_gaussian_product(self, weyl_grid, route):
        """e^{-|z|²} # e^{-|z|²} = e^{-|z|²}/2."""
        g = gaussian_dilated(1.0, weyl_grid)
        assert relative_error(weyl_product(g, g, route=route), 0.5 * g.values) < 1e-5

    @pytest.mark.parametrize("a, b", [(0.75, 0.9), (1.0, 0.8)])
    def test_gaussian_product_rule(self, weyl_grid, a, b):
        """e^{-a|z|²} # e^{-b|z|²} = (1+ab)^{-1} e^{-(a+b)/(1+ab)|z|²}."""
        product = weyl_product(gaussian_dilated(a, weyl_grid), gaussian_dilated(b, weyl_grid))
        expected = gaussian_dilated((a + b) / (1 + a * b), weyl_grid).values / (1 + a * b)
        assert relative_error(product, expected) < 1e-5

    def test_wide_gaussian_acts_as_identity(self, weyl_grid):
        b = gaussian_dilated(1.0, weyl_grid)
        errors = [
            relative_error(weyl_product(gaussian_dilated(1.0 / w**2, weyl_grid), b), b.values)
            for w in (10.0, 100.0, 1000.0)
        ]
        assert errors[0] > errors[1] > errors[2]
        assert errors[-1] < 5e-3

    def test_unknown_route(self, weyl_grid):
        g = gaussian_dilated(1.0, weyl_grid)
        with pytest.raises(ParameterError):
            weyl_product(g, g, route="moyal")

    def test_kernel_grid(self, weyl_grid):
        assert kernel_grid(weyl_grid).points == 32
        with pytest.raises(GridError):
            kernel_grid(GridSpec(dim=2, points=30, half_width=4.0))

    def test_self_dual_grid_aliases_weyl_chirp(self, phase_grid):
        """Weyl kernels need N ≥ 8R²/π, four times the self-dual count."""
        with pytest.raises(GridError):
            symbol_to_kernel(gaussian_dilated(1.0, phase_grid))

    def test_sampled_symbol_on_ground_state(self, base_grid):
        """(e^{-(x²+ξ²)})^w h_0 = h_0/2."""
        symbol_grid = GridSpec(dim=2, points=128, half_width=base_grid.half_width)
        a = gaussian_dilated(1.0, symbol_grid)
        h0 = hermite_function(0, base_grid)
        assert relative_error(weyl_apply(a, h0), 0.5 * h0.values) < 1e-6

    def test_sampled_symbol_lattice(self, base_grid, phase_grid):
        with pytest.raises(GridError):
            sampled_symbol_kernel(gaussian_dilated(1.0, phase_grid), base_grid)

    def test_streamed_symbol_matches_sampled_kernel(self):
        grid = GridSpec.self_dual(2, 16)
        symbol_grid = GridSpec(dim=4, points=32, half_width=grid.half_width)
        g = gaussian_dilated(1.5, grid)
        sampled = weyl_apply(symbol_of("heat", symbol_grid, t=0.5), g)
        assert relative_error(sampled_weyl_apply(HeatSymbol(0.5, 1), g), sampled) < 1e-10

    def test_streamed_symbol_budget(self, phase_grid, monkeypatch):
        monkeypatch.setattr("twistlab.twisted.weyl.MEMORY_BUDGET_BYTES", 1024)
        with pytest.raises(MemoryBudgetError):
            sampled_weyl_apply(HeatSymbol(0.5, 1), gaussian_dilated(1.0, phase_grid))
