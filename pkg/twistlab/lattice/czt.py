"""
Chirp-z evaluation of centered lattice sums.

Every transform in the package reduces to sums of the form

    out[k] = Σ_n v[n] exp(-iω (n + n0)(k + k0)),   k = 0..M-1,

with arbitrary ω. Writing (n + n0)(k + k0) = nk + n·k0 + n0·(k + k0), the
n·k0 term becomes a pre-chirp, n0·(k + k0) a post-chirp, and Σ v'[n] W^{nk}
with W = e^{-iω} is a chirp-z transform (Bluestein, O((N+M) log(N+M))).
"""

import numpy as np
from scipy.signal import czt


def centered_sum(
    values: np.ndarray,
    omega: float,
    in_start: float,
    out_start: float,
    out_len: int,
    axis: int = -1,
) -> np.ndarray:
    """Σ_n v[n] exp(-iω (n + in_start)(k + out_start)) along one axis."""
    v = np.moveaxis(np.asarray(values, dtype=np.complex128), axis, -1)
    n = np.arange(v.shape[-1])
    k = np.arange(out_len)
    pre = np.exp(-1j * omega * out_start * n)
    inner = czt(v * pre, m=out_len, w=np.exp(-1j * omega), a=1.0, axis=-1)
    post = np.exp(-1j * omega * in_start * (k + out_start))
    return np.moveaxis(inner * post, -1, axis)


def centered_sum_axes(
    values: np.ndarray,
    omega: float,
    in_start: float,
    out_start: float,
    out_len: int,
    axes,
) -> np.ndarray:
    """centered_sum applied along each of the given axes in turn."""
    out = values
    for ax in axes:
        out = centered_sum(out, omega, in_start, out_start, out_len, axis=ax)
    return out
