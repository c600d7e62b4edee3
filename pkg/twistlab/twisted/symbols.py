"""
Registered closed-form Weyl symbols.

Unbounded symbols such as |x|² + |ξ|² cannot be represented by decaying
samples, so each registered symbol knows its own operator: a differential
operator for polynomial symbols, an analytic kernel for Θ_t.
"""

import logging
import math
from abc import ABC, abstractmethod

import numpy as np

from ..errors import ParameterError
from ..lattice.field import Field
from ..lattice.fourier import spectral_derivative
from ..lattice.grid import SymplecticForm, require_phase_space
from ..schemas.grid import GridSpec

logger = logging.getLogger(__name__)

REGISTERED_TAG = "registered:"
KERNEL_CHUNK_BYTES = 64 * 1024 * 1024


class RegisteredSymbol(ABC):
    """Closed-form symbol a(x, ξ) on R^n × R^n with an exact quantization."""

    kind: str = ""

    @abstractmethod
    def evaluate(self, x: list[np.ndarray], xi: list[np.ndarray]) -> np.ndarray:
        """a(x, ξ) on broadcastable coordinate arrays."""

    @abstractmethod
    def apply(self, f: Field) -> Field:
        """a^w f."""

    def sample(self, grid: GridSpec, label: str = "") -> Field:
        """Samples on a phase-space lattice (2n, N, R), tagged as registered."""
        n = require_phase_space(grid)
        coords = grid.coords()
        values = np.broadcast_to(self.evaluate(coords[:n], coords[n:]), grid.shape)
        return Field(grid, values, label or self.kind, {REGISTERED_TAG + self.kind})


class ConstantSymbol(RegisteredSymbol):
    kind = "constant"

    def __init__(self, value: complex = 1.0):
        self.value = complex(value)

    def evaluate(self, x, xi):
        return np.full(np.broadcast_shapes(*(c.shape for c in x + xi)), self.value)

    def apply(self, f: Field) -> Field:
        return f.with_values(self.value * f.values)


class QuadraticSymbol(RegisteredSymbol):
    """
    a(x, ξ) = ξ·Aξ + ξ·Bx + x·Cx, quantized as

        -Σ A_jk ∂_j∂_k - i Σ B_jk (x_k ∂_j + δ_jk/2) + x·Cx.
    """

    kind = "quadratic"

    def __init__(self, A, B=None, C=None):
        A = np.atleast_2d(np.asarray(A, dtype=float))
        n = A.shape[0]
        B = np.zeros((n, n)) if B is None else np.atleast_2d(np.asarray(B, dtype=float))
        C = np.zeros((n, n)) if C is None else np.atleast_2d(np.asarray(C, dtype=float))
        for name, M in (("A", A), ("B", B), ("C", C)):
            if M.shape != (n, n):
                raise ParameterError(f"{name} must be {n}×{n}, got {M.shape}")
        self.A = 0.5 * (A + A.T)
        self.B = B
        self.C = 0.5 * (C + C.T)
        self.n = n

    @classmethod
    def hermite(cls, n: int) -> "QuadraticSymbol":
        """|x|² + |ξ|² on R^n × R^n."""
        symbol = cls(np.eye(n), None, np.eye(n))
        symbol.kind = "hermite"
        return symbol

    @classmethod
    def landau(cls, d: int) -> "QuadraticSymbol":
        """|ζ - Jz/2|² on R^{2d} × R^{2d}."""
        J = SymplecticForm(d).matrix
        symbol = cls(np.eye(2 * d), -J, 0.25 * np.eye(2 * d))
        symbol.kind = "landau"
        return symbol

    def evaluate(self, x, xi):
        out = 0.0
        for j in range(self.n):
            for k in range(self.n):
                out = (
                    out
                    + self.A[j, k] * xi[j] * xi[k]
                    + self.B[j, k] * xi[j] * x[k]
                    + self.C[j, k] * x[j] * x[k]
                )
        return out

    def apply(self, f: Field) -> Field:
        if f.grid.dim != self.n:
            raise ParameterError(f"symbol acts on R^{self.n}, field is on R^{f.grid.dim}")
        x = f.grid.coords()
        first = [spectral_derivative(f, j).values for j in range(self.n)]
        out = np.zeros(f.grid.shape, dtype=np.complex128)
        for j in range(self.n):
            for k in range(self.n):
                if self.A[j, k]:
                    if j == k:
                        second = spectral_derivative(f, j, order=2).values
                    else:
                        second = spectral_derivative(f.with_values(first[k]), j).values
                    out -= self.A[j, k] * second
                if self.B[j, k]:
                    term = x[k] * first[j]
                    if j == k:
                        term = term + 0.5 * f.values
                    out -= 1j * self.B[j, k] * term
                if self.C[j, k]:
                    out += self.C[j, k] * x[j] * x[k] * f.values
        return f.with_values(out, f"{self.kind}^w[{f.label}]")


class HeatSymbol(RegisteredSymbol):
    """
    Θ_t(z, ζ) = (cosh t)^{-d} e^{-(tanh t)|ζ - Jz/2|²}, the Weyl symbol of e^{-tL}.

    Its kernel is analytic:
        G(x, y) = (2π)^{-2d} (cosh t)^{-d} (π/tanh t)^d
                  e^{-(i/2)σ(x,y)} e^{-|x-y|²/(4 tanh t)}.
    """

    kind = "heat"

    def __init__(self, t: float, d: int = 1):
        if not t > 0:
            raise ParameterError(f"heat symbol needs t > 0, got {t}")
        self.t = float(t)
        self.d = d

    def evaluate(self, x, xi):
        d = self.d
        # ζ - Jz/2 = (ξ - y/2, η + x/2) for z = (x, y), ζ = (ξ, η)
        shifted = sum(
            (xi[j] - 0.5 * x[d + j]) ** 2 + (xi[d + j] + 0.5 * x[j]) ** 2
            for j in range(d)
        )
        return math.cosh(self.t) ** (-d) * np.exp(-math.tanh(self.t) * shifted)

    def apply(self, f: Field) -> Field:
        d = require_phase_space(f.grid)
        if d != self.d:
            raise ParameterError(f"heat symbol built for d={self.d}, field has d={d}")
        tau = math.tanh(self.t)
        prefactor = (
            (2.0 * math.pi) ** (-2 * d)
            * math.cosh(self.t) ** (-d)
            * (math.pi / tau) ** d
        )
        grid = f.grid
        mesh = np.meshgrid(*[grid.axis()] * (2 * d), indexing="ij")
        points = np.stack([c.reshape(-1) for c in mesh], axis=1)
        norms = np.sum(points**2, axis=1)
        flat = f.values.reshape(-1)
        J = SymplecticForm(d).matrix
        rows = max(1, KERNEL_CHUNK_BYTES // (16 * grid.size))
        out = np.empty(grid.size, dtype=np.complex128)
        for start in range(0, grid.size, rows):
            x = points[start : start + rows]
            # σ(x, y) = Jx·y
            sigma = (x @ J.T) @ points.T
            distance = (
                norms[start : start + rows, None] + norms[None, :] - 2.0 * x @ points.T
            )
            G = np.exp(-0.5j * sigma - distance / (4.0 * tau))
            out[start : start + rows] = G @ flat
        values = out.reshape(grid.shape) * prefactor * grid.weight
        return f.with_values(values, f"Theta_{self.t:g}^w[{f.label}]")


def make_symbol(kind: str, d: int = 1, **params) -> RegisteredSymbol:
    """Registered symbol by name: constant, hermite, landau or heat."""
    if kind == "constant":
        return ConstantSymbol(params.get("value", 1.0))
    if kind == "hermite":
        return QuadraticSymbol.hermite(params.get("n", d))
    if kind == "landau":
        return QuadraticSymbol.landau(d)
    if kind == "heat":
        return HeatSymbol(params["t"], d)
    raise ParameterError(f"unknown registered symbol '{kind}'")


def symbol_of(kind: str, grid: GridSpec, **params) -> Field:
    """Closed-form symbol sampled on a phase-space lattice."""
    n = require_phase_space(grid)
    d = n // 2 if kind in ("landau", "heat") else n
    return make_symbol(kind, d, **params).sample(grid)


def is_registered(symbol) -> bool:
    if isinstance(symbol, RegisteredSymbol):
        return True
    if isinstance(symbol, Field):
        return any(tag.startswith(REGISTERED_TAG) for tag in symbol.tags)
    return False
