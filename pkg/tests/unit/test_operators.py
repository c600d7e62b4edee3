"""
Tests for the differential operators, the intertwiner A_J and the Landau
symplectic matrix.
"""

import math

import numpy as np
import pytest

from twistlab.errors import BandLimitError, DimensionError, ParameterError
from twistlab.lattice import Field, relative_error, tensor
from twistlab.specfun import hermite_function
from twistlab.spectral_ops import (
    apply_hermite_operator,
    apply_twisted_laplacian,
    ladder_lower,
    ladder_raise,
    landau_matrix,
    landau_symplectic_matrix,
    metaplectic_AJ,
)
from twistlab.verification import hermite_tensor_mixture


class TestHermiteOperator:
    """H = -Δ + |x|² and its ladder operators."""

    @pytest.mark.parametrize("n", [0, 1, 3, 7])
    def test_eigenfunctions(self, base_grid, n):
        h = hermite_function(n, base_grid)
        assert relative_error(apply_hermite_operator(h), (2 * n + 1) * h.values) < 1e-8

    @pytest.mark.parametrize("n", [0, 2, 5])
    def test_raise(self, base_grid, n):
        raised = ladder_raise(hermite_function(n, base_grid), 0)
        expected = math.sqrt(2 * (n + 1)) * hermite_function(n + 1, base_grid).values
        assert relative_error(raised, expected) < 1e-8

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_lower(self, base_grid, n):
        lowered = ladder_lower(hermite_function(n, base_grid), 0)
        expected = math.sqrt(2 * n) * hermite_function(n - 1, base_grid).values
        assert relative_error(lowered, expected) < 1e-8

    def test_lower_annihilates_ground_state(self, base_grid):
        assert ladder_lower(hermite_function(0, base_grid), 0).norm() < 1e-10

    def test_axis_out_of_range(self, base_grid):
        with pytest.raises(ParameterError):
            ladder_raise(hermite_function(0, base_grid), 1)

    def test_undecayed_input(self, base_grid):
        with pytest.raises(BandLimitError):
            apply_hermite_operator(Field(base_grid, np.ones(base_grid.shape)))


class TestTwistedLaplacian:
    """L Φ_{α,β} = (1 + 2β) Φ_{α,β} in d = 1."""

    @pytest.mark.parametrize("alpha, beta", [(0, 0), (2, 0), (1, 3), (3, 2)])
    def test_eigenvalues(self, catalog, alpha, beta):
        phi = catalog.special(alpha, beta)
        assert relative_error(apply_twisted_laplacian(phi), (1 + 2 * beta) * phi.values) < 1e-6

    @pytest.mark.parametrize("alpha, beta", [(0, 1), (2, 2)])
    def test_phase_space_oscillator(self, catalog, alpha, beta):
        """(-Δ + ¼|z|²) Φ_{α,β} = (1 + α + β) Φ_{α,β}."""
        phi = catalog.special(alpha, beta)
        result = apply_hermite_operator(phi, scale=0.25)
        assert relative_error(result, (1 + alpha + beta) * phi.values) < 1e-6

    def test_needs_phase_space(self, base_grid):
        with pytest.raises(DimensionError):
            apply_twisted_laplacian(hermite_function(0, base_grid))


# =============================================================================
# Intertwiner
# =============================================================================


class TestMetaplecticAJ:
    """A_J maps Φ_α ⊗ Φ_β to Φ_{α,β} and intertwines L with I ⊗ H."""

    @pytest.mark.parametrize("alpha, beta", [(0, 0), (1, 2), (4, 1)])
    def test_basis_image(self, catalog, alpha, beta):
        image = metaplectic_AJ(tensor(catalog.hermite(alpha), catalog.hermite(beta)))
        assert relative_error(image, catalog.special(alpha, beta)) < 1e-6

    def test_isometry(self, mixture):
        assert metaplectic_AJ(mixture).norm() == pytest.approx(mixture.norm(), rel=1e-8)

    def test_adjoint_inverts(self, mixture):
        back = metaplectic_AJ(metaplectic_AJ(mixture), adjoint=True)
        assert relative_error(back, mixture) < 1e-6

    def test_intertwines(self, catalog):
        g, hg = hermite_tensor_mixture(catalog, seed=4, order=3)
        left = apply_twisted_laplacian(metaplectic_AJ(g))
        assert relative_error(left, metaplectic_AJ(hg)) < 1e-6


class TestLandauMatrix:
    """L_t = e^{-2t𝐋} in closed form."""

    def test_cube_identity(self):
        L = landau_matrix(2)
        assert np.allclose(L @ L @ L, -L, atol=1e-14)

    @pytest.mark.parametrize("t", [0.1, 1.0, 5.0])
    @pytest.mark.parametrize("d", [1, 2])
    def test_closed_form_matches_expm(self, t, d):
        closed, _ = landau_symplectic_matrix(t, d, "closed")
        oracle, _ = landau_symplectic_matrix(t, d, "expm")
        assert np.max(np.abs(closed - oracle)) < 1e-10

    @pytest.mark.parametrize("t", [0.3, 1.0])
    def test_singular_value_pairs(self, t):
        """Two equal blocks of singular values with reciprocal values."""
        _, sv = landau_symplectic_matrix(t, 1)
        top, bottom = sv[:2], sv[2:]
        assert np.ptp(top) < 1e-10
        assert np.ptp(bottom) < 1e-10
        assert top[0] * bottom[0] == pytest.approx(1.0, abs=1e-10)

    def test_period(self):
        Lt, sv = landau_symplectic_matrix(math.pi, 1)
        assert np.allclose(Lt, np.eye(4), atol=1e-12)
        assert np.allclose(sv, 1.0)

    def test_errors(self):
        with pytest.raises(ParameterError):
            landau_matrix(0)
        with pytest.raises(ParameterError):
            landau_symplectic_matrix(1.0, 1, "pade")
