"""
Spectral multipliers m(H) and m(L).

A multiplier is stored by its values on the spectrum, m(d+2k) for
k = 0..K. Applying it expands the input in the cataloged basis, scales each
eigenspace and resynthesizes; whatever the truncated expansion misses is the
truncation residual ‖f - Σ_{k≤K} proj_k f‖.

TWM1 text format:

    # {"format": "TWM1", "dim": 1, "description": "..."}
    0 1.0 0.0
    1 0.5 -0.25
"""

import json
import logging
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

import numpy as np

from ..errors import FieldFormatError, ParameterError, TruncationError
from ..lattice.field import Field
from ..lattice.grid import require_phase_space
from ..specfun.catalog import BasisCatalog
from .metaplectic import metaplectic_AJ
from .projections import (
    _orders,
    catalog_route_fits,
    hermite_coefficients,
    hermite_synthesis,
    landau_coefficients,
    landau_synthesis,
    resolve_catalog,
    second_block_hermite,
)

logger = logging.getLogger(__name__)

TWM1 = "TWM1"


@dataclass(frozen=True)
class MultiplierSpec:
    """Values m(d+2k), k = 0..K, of a function on the spectrum d + 2N."""

    values: tuple[complex, ...]
    dim: int = 1
    description: str = ""
    tail_estimate: float | None = None

    def __post_init__(self):
        values = tuple(complex(v) for v in self.values)
        if not values:
            raise ParameterError("multiplier needs at least the k=0 value")
        if not all(np.isfinite(v) for v in values):
            raise ParameterError(f"multiplier '{self.description}' has non-finite values")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(
        cls,
        func: Callable[[float], complex],
        dim: int,
        truncation: int,
        description: str = "",
    ) -> "MultiplierSpec":
        """Sample func at the eigenvalues d + 2k, k ≤ truncation."""
        values = tuple(complex(func(dim + 2.0 * k)) for k in range(truncation + 1))
        return cls(values, dim, description)

    @property
    def truncation(self) -> int:
        return len(self.values) - 1

    def eigenvalue(self, k: int) -> int:
        return self.dim + 2 * k

    def factors(self, k_max: int) -> np.ndarray:
        """m(d+2k) for k ≤ k_max; orders beyond the truncation map to 0."""
        out = np.zeros(k_max + 1, dtype=np.complex128)
        n = min(k_max, self.truncation) + 1
        out[:n] = self.values[:n]
        return out

    # =========================================================================
    # TWM1 persistence
    # =========================================================================

    def save(self, path: Path) -> Path:
        path = Path(path)
        header = {"format": TWM1, "dim": self.dim, "description": self.description}
        if self.tail_estimate is not None:
            header["tail_estimate"] = self.tail_estimate
        lines = [f"# {json.dumps(header)}"]
        lines += [f"{k} {v.real:.17g} {v.imag:.17g}" for k, v in enumerate(self.values)]
        path.write_text("\n".join(lines) + "\n")
        return path

    @classmethod
    def load(cls, path: Path) -> "MultiplierSpec":
        path = Path(path)
        try:
            lines = path.read_text().splitlines()
        except OSError as e:
            raise FieldFormatError(f"cannot read {path}: {e}") from e
        if not lines or not lines[0].startswith("#"):
            raise FieldFormatError(f"{path}: missing TWM1 header")
        try:
            header = json.loads(lines[0][1:])
        except json.JSONDecodeError as e:
            raise FieldFormatError(f"{path}: malformed header: {e}") from e
        if header.get("format") != TWM1:
            raise FieldFormatError(f"{path}: not a TWM1 file")

        table: dict[int, complex] = {}
        for number, line in enumerate(lines[1:], start=2):
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split()
            try:
                k, re, im = int(parts[0]), float(parts[1]), float(parts[2])
            except (IndexError, ValueError):
                raise FieldFormatError(f"{path}:{number}: expected 'k re im'") from None
            table[k] = complex(re, im)
        if sorted(table) != list(range(len(table))):
            raise FieldFormatError(f"{path}: orders must run 0..K without gaps")
        values = tuple(table[k] for k in range(len(table)))
        return cls(
            values,
            int(header.get("dim", 1)),
            header.get("description", ""),
            header.get("tail_estimate"),
        )


@dataclass
class MultiplierResult:
    """m(·) f with the relative truncation residual of the expansion."""

    field: Field
    residual: float
    truncation: int
    tail_estimate: float


def _check_residual(
    residual: float, norm: float, tolerance: float | None, what: str
) -> float:
    relative = residual / norm if norm > 0 else residual
    if tolerance is not None and relative > tolerance:
        raise TruncationError(
            f"{what}: truncation residual {relative:.3e} exceeds tolerance "
            f"{tolerance:.1e}; raise K or refine the grid",
            residual=relative,
        )
    if tolerance is not None and relative > 0.1 * tolerance:
        logger.warning(f"{what}: truncation residual {relative:.3e} is close to tolerance")
    return relative


def _check_dim(m: MultiplierSpec, d: int) -> None:
    if m.dim != d:
        raise ParameterError(f"multiplier built for d={m.dim}, field needs d={d}")


def multiplier_expand(
    f: Field,
    m: MultiplierSpec,
    which: Literal["hermite", "landau"] = "landau",
    catalog: BasisCatalog | None = None,
    tolerance: float | None = None,
) -> MultiplierResult:
    """
    Σ_k m(d+2k) (P_k or Q_k) f with the relative truncation residual.

    The expansion stops at min(m.truncation, catalog K).
    """
    if which == "hermite":
        d = f.grid.dim
        _check_dim(m, d)
        catalog = resolve_catalog(f.grid, m.truncation, catalog)
        indices, c = hermite_coefficients(f, catalog)
        K = min(m.truncation, catalog.k_max)
        orders = _orders(indices)
        c = np.where(orders <= K, c, 0.0)
        kept = hermite_synthesis(c, catalog)
        out = hermite_synthesis(c * m.factors(catalog.k_max)[orders], catalog)
    elif which == "landau":
        d = require_phase_space(f.grid)
        _check_dim(m, d)
        catalog = resolve_catalog(f.grid.half(), m.truncation, catalog)
        K = min(m.truncation, catalog.k_max)
        route = "catalog" if catalog_route_fits(catalog) else "tensor"
        logger.debug(f"landau expansion through the {route} route")
        coeffs = landau_coefficients(f, catalog, levels=range(K + 1), route=route)
        kept = landau_synthesis(coeffs, catalog, route=route)
        out = landau_synthesis(coeffs.scaled(m.factors(catalog.k_max)), catalog, route=route)
    else:
        raise ParameterError(f"unknown operator '{which}' (expected hermite or landau)")

    residual = (f - kept.values).norm()
    relative = _check_residual(residual, f.norm(), tolerance, m.description or "multiplier")
    tail = abs(m.values[min(K, m.truncation)]) * relative
    logger.debug(f"{which} multiplier K={K}: residual {relative:.2e}")
    field = Field(f.grid, out.values, f"m({which[0].upper()})[{f.label}]")
    return MultiplierResult(field, relative, K, tail)


def multiplier_apply(
    f: Field,
    m: MultiplierSpec,
    which: Literal["hermite", "landau"] = "landau",
    catalog: BasisCatalog | None = None,
    tolerance: float | None = None,
) -> Field:
    """Σ_k m(d+2k) (P_k or Q_k) f; TruncationError above `tolerance`."""
    return multiplier_expand(f, m, which, catalog, tolerance).field


def transferred_expand(
    f: Field,
    m: MultiplierSpec,
    catalog: BasisCatalog | None = None,
    tolerance: float | None = None,
) -> MultiplierResult:
    """A_J (I ⊗ m(H)) A_J* f, with m(H) acting on the second block only."""
    d = require_phase_space(f.grid)
    _check_dim(m, d)
    catalog = resolve_catalog(f.grid.half(), m.truncation, catalog)
    K = min(m.truncation, catalog.k_max)
    indices, B, G = second_block_hermite(f, catalog)
    _, H = catalog.hermite_matrix()
    orders = _orders(indices)
    B = np.where((orders <= K)[None, :], B, 0.0)
    kept = B @ H.T
    residual = float(np.sqrt(np.sum(np.abs(G - kept) ** 2)) * catalog.grid.weight)
    relative = _check_residual(residual, f.norm(), tolerance, m.description or "multiplier")
    scaled = (B * m.factors(catalog.k_max)[orders][None, :]) @ H.T
    out = metaplectic_AJ(Field(f.grid, scaled))
    field = Field(f.grid, out.values, f"AJ(I⊗m(H))AJ*[{f.label}]")
    tail = abs(m.values[min(K, m.truncation)]) * relative
    return MultiplierResult(field, relative, K, tail)


def transferred_multiplier(
    f: Field,
    m: MultiplierSpec,
    catalog: BasisCatalog | None = None,
    tolerance: float | None = None,
) -> Field:
    return transferred_expand(f, m, catalog, tolerance).field
