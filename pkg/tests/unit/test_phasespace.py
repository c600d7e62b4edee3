"""
Tests for phase-space transforms, mixed norms, index logic and export.
"""

import math

import numpy as np
import pytest

from twistlab.errors import (
    BandLimitError,
    FieldFormatError,
    GridError,
    MemoryBudgetError,
    ParameterError,
)
from twistlab.lattice import Field, relative_error, save_field
from twistlab.lattice.fourier import symplectic_grid
from twistlab.phasespace import (
    PhaseSpaceField,
    admissibility_forms_agree,
    ambiguity,
    as_field,
    default_window,
    field_norm,
    gabor_transform,
    gaussian_amalgam_norm,
    heat_index_constants,
    lebesgue_embedding_ratios,
    lebesgue_exponent,
    mixed_norm,
    polynomial_weight,
    symplectic_gabor,
    weyl_product_admissible,
    weyl_product_admissible_restated,
    wigner,
)
from twistlab.phasespace.export import load_phase_space, save_phase_space
from twistlab.schemas import GridSpec, MixedNormSpec
from twistlab.specfun import gaussian_dilated, hermite_function, hermite_m1_norm
from twistlab.verification import gaussian_mixture


def gaussian_oracle(grid: GridSpec, scale: float, rate: float) -> np.ndarray:
    return scale * np.exp(-rate * grid.radius_squared())


class TestPhaseSpaceField:
    """Tests for the lazy slice container."""

    def test_from_array(self, base_grid):
        values = np.arange(base_grid.size**2).reshape(64, 64)
        F = PhaseSpaceField.from_array(base_grid, base_grid, values, "ramp")
        assert F.shape == (64, 64)
        assert F.nbytes == 16 * 64 * 64
        assert F.at((3,))[5] == values[3, 5]
        assert np.array_equal(F.materialize(), values)

    def test_memory_budget(self, base_grid):
        F = PhaseSpaceField(
            base_grid, base_grid, lambda idx: np.zeros(64), "big", memory_budget=1024
        )
        with pytest.raises(MemoryBudgetError):
            F.materialize()

    def test_map_is_lazy(self, base_grid):
        calls = []

        def slice_fn(idx):
            calls.append(idx)
            return np.ones(64)

        F = PhaseSpaceField(base_grid, base_grid, slice_fn)
        doubled = F.map(lambda idx, values: 2 * values)
        assert not calls
        assert np.all(doubled.at((0,)) == 2)
        assert calls == [(0,)]

    def test_stride(self, base_grid):
        F = PhaseSpaceField(base_grid, base_grid, lambda idx: np.zeros(64))
        assert len(list(F.slices(stride=8))) == 8


# =============================================================================
# Transforms
# =============================================================================


class TestTransforms:
    """Closed forms for the Gaussian ground state h_0."""

    def test_gabor_modulus(self, base_grid, phase_grid):
        """|V_{h0} h0| = (2π)^{-1/2} e^{-(x²+ξ²)/4}."""
        h0 = hermite_function(0, base_grid)
        V = gabor_transform(h0, h0).materialize()
        expected = gaussian_oracle(phase_grid, (2 * math.pi) ** -0.5, 0.25)
        assert relative_error(np.abs(V), expected) < 1e-9

    def test_ambiguity(self, base_grid, phase_grid):
        """A(h0, h0) = (2π)^{-1/2} e^{-(x²+ξ²)/4}."""
        h0 = hermite_function(0, base_grid)
        A = as_field(ambiguity(h0, h0))
        assert A.grid.same_lattice(phase_grid)
        expected = gaussian_oracle(phase_grid, (2 * math.pi) ** -0.5, 0.25)
        assert relative_error(A, expected) < 1e-9

    def test_wigner(self):
        """W(h0, h0) = 2(2π)^{-1/2} e^{-(x²+ξ²)} on the half-band lattice."""
        grid = GridSpec.self_dual(1, 128)
        h0 = hermite_function(0, grid)
        W = wigner(h0, h0)
        assert W.frequency.half_width == pytest.approx(math.pi / (2 * grid.spacing))
        x = W.position.axis()
        xi = W.frequency.axis()
        expected = 2 * (2 * math.pi) ** -0.5 * np.exp(-np.add.outer(x**2, xi**2))
        assert relative_error(W.materialize(), expected) < 1e-8

    def test_wigner_band_limit(self, base_grid):
        """On the coarse lattice h_0 has content beyond π/(2h)."""
        h0 = hermite_function(0, base_grid)
        with pytest.raises(BandLimitError):
            wigner(h0, h0)

    def test_wigner_is_not_a_field_on_its_own_lattice(self):
        grid = GridSpec.self_dual(1, 128)
        h0 = hermite_function(0, grid)
        with pytest.raises(GridError):
            as_field(wigner(h0, h0))

    def test_zero_window(self, base_grid):
        h0 = hermite_function(0, base_grid)
        with pytest.raises(ParameterError):
            gabor_transform(h0, Field.zeros(base_grid))

    def test_symplectic_gabor_lattice(self):
        grid = GridSpec.self_dual(2, 16)
        f = gaussian_dilated(1.0, grid)
        F = symplectic_gabor(f, f)
        assert F.frequency == symplectic_grid(grid)
        assert F.shape == (16, 16, 16, 16)


class TestMoyal:
    """‖V_g f‖_{L²} = ‖f‖‖g‖."""

    @pytest.mark.parametrize("seed", [0, 1])
    def test_gabor(self, base_grid, seed):
        f = gaussian_mixture(base_grid, seed=seed)
        g = gaussian_mixture(base_grid, seed=seed + 10, n_terms=1, widths=(0.4, 0.6))
        value = mixed_norm(gabor_transform(f, g), MixedNormSpec(p=2.0, q=2.0))
        assert value == pytest.approx(f.norm() * g.norm(), rel=1e-8)

    def test_symplectic_gabor(self):
        grid = GridSpec.self_dual(2, 32)
        f = gaussian_mixture(grid, seed=30, widths=(0.8, 1.2))
        w = gaussian_dilated(1.0, grid)
        value = mixed_norm(symplectic_gabor(f, w), MixedNormSpec(p=2.0, q=2.0))
        assert value == pytest.approx(f.norm() * w.norm(), rel=1e-8)


# =============================================================================
# Norms
# =============================================================================


class TestNorms:
    """Weighted mixed norms of Gabor transforms."""

    def test_polynomial_weight(self):
        assert polynomial_weight(1.0, np.array(2.0), 2.0) == pytest.approx(4.0)
        assert polynomial_weight(5.0, np.array(7.0), 0.0) == 1.0

    def test_default_window_is_normalized(self, base_grid):
        g = default_window(hermite_function(0, base_grid))
        assert g.norm() == pytest.approx(1.0, abs=1e-12)
        assert default_window(g, symplectic=True).values[32] == 1.0

    def test_m1_norm_of_ground_state(self, base_grid):
        h0 = hermite_function(0, base_grid)
        assert field_norm(h0, MixedNormSpec()) == pytest.approx(
            hermite_m1_norm((0,)), rel=1e-8
        )

    def test_m1_norm_with_own_window(self, base_grid):
        """‖A(h1, h1)‖_{L¹} against the Laguerre integral."""
        h1 = hermite_function(1, base_grid)
        assert field_norm(h1, MixedNormSpec(), window=h1) == pytest.approx(
            hermite_m1_norm((1,)), rel=1e-2
        )

    def test_sup_norm(self, base_grid):
        h0 = hermite_function(0, base_grid)
        value = field_norm(h0, MixedNormSpec(p=math.inf, q=math.inf))
        assert value == pytest.approx((2 * math.pi) ** -0.5, rel=1e-9)

    def test_flavors_agree_for_equal_exponents(self, base_grid):
        f = gaussian_mixture(base_grid, seed=2)
        spec = MixedNormSpec(p=2.0, q=2.0, s=1.0)
        assert field_norm(f, spec) == pytest.approx(field_norm(f, spec.swapped()), rel=1e-10)

    def test_weight_increases_norm(self, base_grid):
        f = gaussian_mixture(base_grid, seed=2)
        plain = field_norm(f, MixedNormSpec(p=2.0, q=1.0))
        weighted = field_norm(f, MixedNormSpec(p=2.0, q=1.0, s=2.0))
        assert weighted > plain

    def test_embedding_ratios_at_two(self, base_grid):
        """W^{2,2} = L² with equal norms for an L²-normalized window."""
        lower, upper = lebesgue_embedding_ratios(gaussian_mixture(base_grid, seed=3), 2.0)
        assert lower == pytest.approx(1.0, rel=1e-8)
        assert upper == pytest.approx(1.0, rel=1e-8)

    def test_gaussian_amalgam_closed_form(self):
        """At p = q = 2 the closed form reduces to ‖g_λ‖₂‖e^{-|z|²}‖₂."""
        lam = 0.7
        expected = math.sqrt(math.pi / (2 * lam)) * math.sqrt(math.pi / 2)
        assert gaussian_amalgam_norm(lam, 2.0, 2.0) == pytest.approx(expected)
        assert gaussian_amalgam_norm(lam, math.inf, math.inf) == pytest.approx(1.0 / (1.0 + lam))

    def test_gaussian_amalgam_dilation_ratios(self):
        """Numerical amalgam norms of g_λ scale in λ like the closed form."""
        grid = GridSpec(dim=2, points=48, half_width=6.0)
        spec = MixedNormSpec(p=1.0, q=2.0, flavor="amalgam")
        numeric = {}
        for lam in (1.0, 2.0, 4.0):
            g = gaussian_dilated(lam, grid)
            numeric[lam] = mixed_norm(symplectic_gabor(g, default_window(g, True)), spec)
        for lam in (2.0, 4.0):
            expected = gaussian_amalgam_norm(lam, 1.0, 2.0)
            expected /= gaussian_amalgam_norm(1.0, 1.0, 2.0)
            assert numeric[lam] / numeric[1.0] == pytest.approx(expected, rel=0.02)


# =============================================================================
# Index logic
# =============================================================================


class TestIndexLogic:
    """Exact rational index conditions."""

    @pytest.mark.parametrize(
        "t, admissible",
        [
            ((1, 1, 1, 1, 1, 1), True),
            ((2, 2, 2, 2, 2, 2), True),
            ((2, 2, 2, 2, 1, 2), False),
            ((1, 1, 1, 1, 1, math.inf), True),
        ],
    )
    def test_weyl_product(self, t, admissible):
        assert weyl_product_admissible(t) is admissible
        assert weyl_product_admissible_restated(t) is admissible
        assert admissibility_forms_agree(t)

    def test_heat_constants(self):
        constants = heat_index_constants(2, 1, 1, 2, nu=0.5, d=2)
        assert constants.admissible
        assert constants.small_time_exponent == pytest.approx(2.0)
        assert constants.large_time_rate == pytest.approx(math.sqrt(2))

    def test_heat_constants_shrinking_q(self):
        assert not heat_index_constants(1, 2, 1, 1).admissible

    def test_heat_constants_ranges(self):
        with pytest.raises(ParameterError):
            heat_index_constants(1, 1, 1, 1, nu=1.5)
        with pytest.raises(ParameterError):
            heat_index_constants(0.5, 1, 1, 1)

    def test_lebesgue_exponent(self):
        assert lebesgue_exponent(1.0, math.inf) == pytest.approx(1.0)
        assert lebesgue_exponent(2.0, 2.0) == 0.0
        assert lebesgue_exponent(1.0, math.inf, nu=0.5, d=2) == pytest.approx(4.0)
        with pytest.raises(ParameterError):
            lebesgue_exponent(4.0, 2.0)


# =============================================================================
# Export
# =============================================================================


class TestPhaseSpaceExport:
    def test_round_trip(self, base_grid, tmp_path):
        h0 = hermite_function(0, base_grid)
        F = ambiguity(h0, h0)
        path = save_phase_space(F, tmp_path / "amb.twf")
        loaded = load_phase_space(path)
        assert loaded.position.same_lattice(F.position)
        assert np.array_equal(loaded.materialize(), F.materialize())

    def test_field_container_rejected(self, base_grid, tmp_path):
        path = save_field(hermite_function(0, base_grid), tmp_path / "h0.twf")
        with pytest.raises(FieldFormatError):
            load_phase_space(path)
