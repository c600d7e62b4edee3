"""
Sampled complex fields on a GridSpec, with rectangle-rule quadrature.
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from ..data.defaults import SCHWARTZ_SHELL_THRESHOLD
from ..errors import BandLimitError, DataError, GridError, ParameterError
from ..schemas.grid import GridSpec

logger = logging.getLogger(__name__)

SCHWARTZ = "schwartz-class"


@dataclass(frozen=True, eq=False)
class Field:
    """
    Complex samples of a function on a uniform lattice.

    The values array is copied on construction and made read-only, so a
    Field can be shared across threads.
    """

    grid: GridSpec
    values: np.ndarray
    label: str = ""
    tags: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        values = np.array(self.values, dtype=np.complex128)
        if values.shape != self.grid.shape:
            if values.size != self.grid.size:
                raise DataError(
                    f"{values.size} samples do not fit grid of shape {self.grid.shape}"
                )
            values = values.reshape(self.grid.shape)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "tags", frozenset(self.tags))
        if SCHWARTZ in self.tags:
            ratio = self.shell_ratio()
            if ratio >= SCHWARTZ_SHELL_THRESHOLD:
                raise BandLimitError(
                    f"field '{self.label}' is tagged {SCHWARTZ} but its boundary "
                    f"shell reaches {ratio:.2e} of its maximum"
                )

    @classmethod
    def from_function(
        cls,
        grid: GridSpec,
        func: Callable[..., np.ndarray],
        label: str = "",
        tags=(),
    ) -> "Field":
        """Sample func(x_1, ..., x_n) on open lattice coordinates."""
        values = np.broadcast_to(func(*grid.coords()), grid.shape)
        return cls(grid, values, label, frozenset(tags))

    @classmethod
    def zeros(cls, grid: GridSpec, label: str = "") -> "Field":
        return cls(grid, np.zeros(grid.shape, dtype=np.complex128), label)

    def with_values(self, values: np.ndarray, label: str | None = None) -> "Field":
        """New field on the same grid."""
        return Field(self.grid, values, self.label if label is None else label)

    def conj(self) -> "Field":
        return self.with_values(np.conj(self.values))

    def shell_ratio(self) -> float:
        """max|f| on the outermost lattice shell over max|f|."""
        magnitude = np.abs(self.values)
        peak = magnitude.max(initial=0.0)
        if peak == 0.0:
            return 0.0
        shell = max(
            max(np.take(magnitude, 0, axis=ax).max(), np.take(magnitude, -1, axis=ax).max())
            for ax in range(magnitude.ndim)
        )
        return float(shell / peak)

    def require_finite(self) -> None:
        if not np.all(np.isfinite(self.values)):
            raise DataError(f"field '{self.label}' has non-finite samples")

    def require_same_grid(self, other: "Field") -> None:
        if not self.grid.same_lattice(other.grid):
            raise GridError(
                f"grid mismatch: {self.grid.describe()} vs {other.grid.describe()}"
            )

    def norm(self, p: float = 2.0) -> float:
        return quadrature_lp_norm(self, p)

    def inner(self, other: "Field") -> complex:
        return inner(self, other)

    def _coerce(self, other) -> np.ndarray:
        if isinstance(other, Field):
            self.require_same_grid(other)
            return other.values
        return other

    def __add__(self, other) -> "Field":
        return self.with_values(self.values + self._coerce(other))

    def __sub__(self, other) -> "Field":
        return self.with_values(self.values - self._coerce(other))

    def __mul__(self, other) -> "Field":
        return self.with_values(self.values * self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Field":
        return self.with_values(self.values / self._coerce(other))

    def __neg__(self) -> "Field":
        return self.with_values(-self.values)


def quadrature_lp_norm(f: Field, p: float) -> float:
    """(Σ|f|^p h^n)^{1/p}, or max|f| for p = ∞."""
    if not p >= 1:
        raise ParameterError(f"L^p exponent must be ≥ 1, got {p}")
    magnitude = np.abs(f.values)
    if math.isinf(p):
        return float(magnitude.max(initial=0.0))
    return float((np.sum(magnitude**p) * f.grid.weight) ** (1.0 / p))


def inner(f: Field, g: Field) -> complex:
    """⟨f, g⟩ = Σ f·conj(g) h^n."""
    f.require_same_grid(g)
    return complex(np.vdot(g.values, f.values) * f.grid.weight)


def relative_error(actual: Field | np.ndarray, expected: Field | np.ndarray) -> float:
    """Discrete relative L² error ‖actual - expected‖ / ‖expected‖."""
    a = actual.values if isinstance(actual, Field) else np.asarray(actual)
    b = expected.values if isinstance(expected, Field) else np.asarray(expected)
    scale = np.linalg.norm(b)
    if scale == 0.0:
        return float(np.linalg.norm(a))
    return float(np.linalg.norm(a - b) / scale)


def tensor(f: Field, g: Field, label: str = "") -> Field:
    """f⊗g on the concatenated grid (same N and R on every axis)."""
    if f.grid.points != g.grid.points or not math.isclose(
        f.grid.half_width, g.grid.half_width, rel_tol=1e-12
    ):
        raise GridError("tensor factors must share N and R")
    grid = f.grid.with_dim(f.grid.dim + g.grid.dim)
    values = np.multiply.outer(f.values, g.values)
    return Field(grid, values, label or f"{f.label}⊗{g.label}")


def translate(f: Field, shift: tuple[int, ...]) -> Field:
    """
    T_x f(y) = f(y - x) for x = shift·h, a whole-sample shift.

    Samples shifted in from outside the window are zero.
    """
    if len(shift) != f.grid.dim:
        raise ParameterError(f"shift needs {f.grid.dim} components, got {len(shift)}")
    out = np.zeros_like(f.values)
    src = []
    dst = []
    n = f.grid.points
    for s in shift:
        s = int(s)
        if abs(s) >= n:
            return f.with_values(out)
        dst.append(slice(max(s, 0), n + min(s, 0)))
        src.append(slice(max(-s, 0), n - max(s, 0)))
    out[tuple(dst)] = f.values[tuple(src)]
    return f.with_values(out)


def modulate(f: Field, xi: tuple[float, ...]) -> Field:
    """M_ξ f(y) = e^{iξ·y} f(y)."""
    coords = f.grid.coords()
    phase = sum(xi[j] * coords[j] for j in range(f.grid.dim))
    return f.with_values(f.values * np.exp(1j * phase))


def time_frequency_shift(f: Field, shift: tuple[int, ...], xi: tuple[float, ...]) -> Field:
    """π(x, ξ) f = M_ξ T_x f with x = shift·h."""
    return modulate(translate(f, shift), xi)
