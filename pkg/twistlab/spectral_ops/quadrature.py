"""
Quadrature rules for time integrals over semigroups.

Half-line integrals ∫₀^∞ g(s) ds use the exp-sinh substitution
s = exp((π/2) sinh τ) and the trapezoidal rule in τ. Integrands with
algebraic behavior at 0 and exponential decay at ∞ (subordinator densities,
t^{ν-1} e^{-tu}) become doubly-exponentially small at both ends.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gamma as gamma_fn

from ..data.defaults import QUADRATURE_DEFAULTS
from ..errors import ParameterError

logger = logging.getLogger(__name__)

# Relative size below which a node's contribution is dropped
PRUNE_LEVEL = 1e-18


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray

    def __len__(self) -> int:
        return len(self.nodes)

    def integrate(self, func) -> float | complex:
        values = func(self.nodes)
        terms = self.weights * values
        total = np.sum(terms)
        edge = abs(terms[0]) + abs(terms[-1])
        if abs(total) > 0 and edge > 1e-12 * abs(total):
            logger.warning(
                f"quadrature endpoints carry {edge / abs(total):.1e} of the integral; "
                "widen the rule"
            )
        return total

    def reweighted(self, density: np.ndarray) -> "QuadratureRule":
        return QuadratureRule(self.nodes, self.weights * density)

    def pruned(self, envelope: np.ndarray | None = None) -> "QuadratureRule":
        """Drop nodes whose |weight|·envelope is negligible against the total."""
        size = np.abs(self.weights)
        if envelope is not None:
            size = size * envelope
        keep = size > PRUNE_LEVEL * size.sum()
        return QuadratureRule(self.nodes[keep], self.weights[keep])


def exp_sinh_rule(n_nodes: int | None = None, step: float | None = None) -> QuadratureRule:
    """Nodes and weights for ∫₀^∞ g(s) ds."""
    n_nodes = n_nodes or QUADRATURE_DEFAULTS["subordination_nodes"]
    step = step or QUADRATURE_DEFAULTS["exp_sinh_step"]
    if n_nodes < 2 or step <= 0:
        raise ParameterError(f"invalid exp-sinh rule: {n_nodes} nodes, step {step}")
    tau = (np.arange(n_nodes + 1) - n_nodes / 2) * step
    arg = 0.5 * math.pi * np.sinh(tau)
    nodes = np.exp(arg)
    weights = step * 0.5 * math.pi * np.cosh(tau) * nodes
    return QuadratureRule(nodes, weights)


# =============================================================================
# Subordination
# =============================================================================


def subordination_density(s, t: float) -> np.ndarray:
    """η_t(s) = t (2√π)^{-1} s^{-3/2} e^{-t²/(4s)}, the 1/2-stable density."""
    if t <= 0:
        raise ParameterError(f"subordination needs t > 0, got {t}")
    s = np.asarray(s, dtype=float)
    with np.errstate(over="ignore", under="ignore"):
        return t / (2.0 * math.sqrt(math.pi)) * s**-1.5 * np.exp(-(t * t) / (4.0 * s))


def subordination_rule(t: float, n_nodes: int | None = None) -> QuadratureRule:
    """Rule for ∫₀^∞ g(s) η_t(s) ds."""
    rule = exp_sinh_rule(n_nodes)
    return rule.reweighted(subordination_density(rule.nodes, t))


def subordination_identity(u: float, t: float, n_nodes: int | None = None) -> float:
    """∫₀^∞ e^{-us} η_t(s) ds, which equals e^{-t√u}."""
    if u < 0:
        raise ParameterError(f"u must be ≥ 0, got {u}")
    rule = subordination_rule(t, n_nodes)
    return float(rule.integrate(lambda s: np.exp(-u * s)))


# =============================================================================
# Gamma integrals
# =============================================================================


def gamma_rule(nu: float, shift: float = 0.0, n_nodes: int | None = None) -> QuadratureRule:
    """Rule for Γ(ν)^{-1} ∫₀^∞ g(t) t^{ν-1} e^{-shift·t} dt."""
    if nu <= 0:
        raise ParameterError(f"ν must be > 0, got {nu}")
    rule = exp_sinh_rule(n_nodes or QUADRATURE_DEFAULTS["gamma_nodes"])
    t = rule.nodes
    with np.errstate(over="ignore", under="ignore"):
        density = t ** (nu - 1.0) * np.exp(-shift * t) / gamma_fn(nu)
    return rule.reweighted(np.nan_to_num(density, nan=0.0, posinf=0.0))


def gamma_identity(u: float, nu: float, n_nodes: int | None = None) -> float:
    """Γ(ν)^{-1} ∫₀^∞ e^{-yu} y^{ν-1} dy, which equals u^{-ν}."""
    if u <= 0:
        raise ParameterError(f"u must be > 0, got {u}")
    rule = gamma_rule(nu, n_nodes=n_nodes)
    return float(rule.integrate(lambda y: np.exp(-u * y)))
