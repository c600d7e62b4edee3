"""
Shared fixtures for twistlab tests.

Grids are small (N ≤ 64 per axis) so every test runs in seconds. The
self-dual phase-space grid with N = 64 sits exactly on the alias-free bound
N = 2R²/π of the kernel transforms.
"""

import pytest

from twistlab.lattice import tensor
from twistlab.schemas import GridSpec, RunConfig
from twistlab.specfun import BasisCatalog, hermite_function
from twistlab.spectral_ops import metaplectic_AJ
from twistlab.verification import gaussian_mixture, hermite_tensor_mixture


@pytest.fixture(scope="session")
def base_grid():
    """Self-dual lattice on R with 64 samples (R ≈ 10)."""
    return GridSpec.self_dual(1, 64)


@pytest.fixture(scope="session")
def phase_grid():
    """Self-dual lattice on R^2 with 64 samples per axis."""
    return GridSpec.self_dual(2, 64)


@pytest.fixture(scope="session")
def weyl_grid():
    """Symbol lattice on R^2 where Weyl products are alias-free."""
    return GridSpec.self_dual(2, 64, 0.25)


@pytest.fixture(scope="session")
def catalog(base_grid):
    """Hermite catalog up to order 12 on the base grid."""
    return BasisCatalog.build(1, 12, base_grid, workers=1)


@pytest.fixture
def mixture(phase_grid):
    """Seeded complex Gaussian mixture on the phase-space grid."""
    return gaussian_mixture(phase_grid, seed=1)


@pytest.fixture
def span_field(catalog):
    """A_J of a tensor Hermite mixture: exactly in the span of Φ_{α,β}, |α|,|β| ≤ 3."""
    f, _ = hermite_tensor_mixture(catalog, seed=4, order=3)
    return metaplectic_AJ(f)


@pytest.fixture
def hermite_pair(base_grid):
    """Factory for Φ_α ⊗ Φ_β on the phase-space grid (d = 1)."""

    def make(alpha: int, beta: int):
        return tensor(hermite_function(alpha, base_grid), hermite_function(beta, base_grid))

    return make


@pytest.fixture
def small_config(tmp_path):
    """Run configuration on a 64-point grid writing into tmp_path."""
    return RunConfig(dim=1, points=64, k_max=8, truncation=12, output_dir=tmp_path)
