"""
Laguerre polynomials of type δ by three-term recurrence.

    (n+1) L_{n+1}^δ(y) = (2n+1+δ-y) L_n^δ(y) - (n+δ) L_{n-1}^δ(y)
"""

import numpy as np

from ..errors import ParameterError


def _check(n: int, delta: float) -> None:
    if n < 0:
        raise ParameterError(f"Laguerre degree must be ≥ 0, got {n}")
    if delta <= -1:
        raise ParameterError(f"Laguerre type must be > -1, got {delta}")


def laguerre_table(n_max: int, delta: float, y) -> np.ndarray:
    """Rows L_0^δ..L_{n_max}^δ evaluated at y."""
    _check(n_max, delta)
    y = np.asarray(y, dtype=float)
    table = np.empty((n_max + 1,) + y.shape)
    table[0] = 1.0
    if n_max >= 1:
        table[1] = 1.0 + delta - y
    for n in range(1, n_max):
        table[n + 1] = (
            (2 * n + 1 + delta - y) * table[n] - (n + delta) * table[n - 1]
        ) / (n + 1)
    return table


def laguerre_polynomial(n: int, delta: float, y):
    """L_n^δ(y); scalar in, scalar out."""
    value = laguerre_table(n, delta, y)[n]
    return float(value) if np.ndim(value) == 0 else value


def laguerre_function(n: int, y):
    """L_n(y) e^{-y/2}, orthonormal on (0, ∞)."""
    y = np.asarray(y, dtype=float)
    return laguerre_table(n, 0.0, y)[n] * np.exp(-0.5 * y)


def laguerre_generating_sum(y, r: float, n_terms: int, delta: float = 0.0):
    """Partial sum Σ_{n<n_terms} L_n^δ(y) r^n."""
    table = laguerre_table(n_terms - 1, delta, y)
    powers = r ** np.arange(n_terms)
    return np.tensordot(powers, table, axes=1)


def laguerre_generating_function(y, r: float, delta: float = 0.0):
    """(1-r)^{-δ-1} e^{-ry/(1-r)} for |r| < 1."""
    if not abs(r) < 1:
        raise ParameterError(f"generating function needs |r| < 1, got {r}")
    y = np.asarray(y, dtype=float)
    return (1.0 - r) ** (-delta - 1.0) * np.exp(-r * y / (1.0 - r))
