"""
Default numerical settings.

Pure static tables; no logic beyond small lookup helpers. Values here are the
last layer of configuration precedence (flags > JSON config > defaults).
"""

from typing import TypedDict


class DimensionDefaults(TypedDict):
    """Type definition for per-dimension defaults."""

    k_max: int
    points: int
    truncation: int
    description: str


class QuadratureDefaults(TypedDict):
    """Type definition for quadrature rule sizes."""

    subordination_nodes: int
    gamma_nodes: int
    riesz_nodes: int
    exp_sinh_step: float


class Tolerances(TypedDict):
    """Type definition for verification tolerances."""

    orthonormality: float
    eigen: float
    twisted_algebra: float
    heat_series: float
    route_agreement: float
    unitarity: float
    subordination: float
    landau_matrix: float
    slope: float
    sharpness: float
    oracle: float
    intertwine: float
    fractional_slope: float
    dilation_ratio: float
    growth: float
    rate: float


DIMENSION_DEFAULTS: dict[int, DimensionDefaults] = {
    1: {
        "k_max": 32,
        "points": 160,
        "truncation": 48,
        "description": "Hermite functions on R, special Hermite on R^2",
    },
    2: {
        "k_max": 8,
        "points": 32,
        "truncation": 8,
        "description": "Hermite functions on R^2, special Hermite on R^4",
    },
}

QUADRATURE_DEFAULTS: QuadratureDefaults = {
    "subordination_nodes": 200,
    "gamma_nodes": 200,
    "riesz_nodes": 64,
    "exp_sinh_step": 0.05,
}

TOLERANCES: Tolerances = {
    "orthonormality": 1e-8,
    "eigen": 1e-6,
    "twisted_algebra": 1e-6,
    "heat_series": 1e-10,
    "route_agreement": 1e-5,
    "unitarity": 1e-8,
    "subordination": 1e-8,
    "landau_matrix": 1e-10,
    "slope": 0.05,
    "sharpness": 1e-10,
    "oracle": 1e-7,
    "intertwine": 1e-6,
    "fractional_slope": 0.10,
    "dilation_ratio": 0.02,
    "growth": 0.15,
    "rate": 1e-3,
}

# 512 MiB of complex128 samples
MEMORY_BUDGET_BYTES = 512 * 1024 * 1024

# Decay margin added to the Hermite turning point when choosing a window
WINDOW_MARGIN = 4.0

# Relative size of samples allowed on the outermost grid shell
SCHWARTZ_SHELL_THRESHOLD = 1e-10

# Boundary level above which spectral differentiation sees wrap-around
DERIVATIVE_SHELL_THRESHOLD = 1e-6

CACHE_DIR_ENV = "TWISTLAB_CACHE_DIR"
THREADS_ENV = "TWISTLAB_THREADS"


def get_dimension_defaults(dim: int) -> DimensionDefaults:
    """Get defaults for a base dimension d (falls back to d=1)."""
    return DIMENSION_DEFAULTS.get(dim, DIMENSION_DEFAULTS[1])
