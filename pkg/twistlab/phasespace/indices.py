"""
Index conditions in exact rational arithmetic.

Boundary cases such as 1/p0 + 1/p1 - 1/p2 = 1/q2 must not depend on rounding,
so every reciprocal is a Fraction (1/∞ = 0).
"""

from fractions import Fraction

from ..errors import ParameterError
from ..schemas.norms import (
    HeatIndexConstants,
    IndexTuple,
    conjugate_reciprocal,
    reciprocal,
)


def _as_tuple(t) -> IndexTuple:
    return t if isinstance(t, IndexTuple) else IndexTuple.from_sequence(t)


def weyl_product_admissible(t) -> bool:
    """
    max{1 + 1/q2 - 1/q0 - 1/q1, 0}
        ≤ min{1/p0, 1/p1, 1/p2', 1/q0', 1/q1', 1/q2, 1/p0 + 1/p1 - 1/p2}
    """
    t = _as_tuple(t)
    r = t.reciprocals()
    lhs = max(1 + r["q2"] - r["q0"] - r["q1"], Fraction(0))
    rhs = min(
        r["p0"],
        r["p1"],
        conjugate_reciprocal(t.p2),
        conjugate_reciprocal(t.q0),
        conjugate_reciprocal(t.q1),
        r["q2"],
        r["p0"] + r["p1"] - r["p2"],
    )
    return lhs <= rhs


def weyl_product_admissible_restated(t) -> bool:
    """The same condition as a system of separate inequalities."""
    t = _as_tuple(t)
    r = t.reciprocals()
    q_sum = r["q0"] + r["q1"]
    if r["p2"] > r["p0"] + r["p1"]:
        return False
    if t.q2 < t.q0 or t.q2 < t.q1:
        return False
    if q_sum < 1:
        return False
    bound = max(
        1 - r["p1"] + r["q2"],
        1 - r["p0"] + r["q2"],
        r["p2"] + r["q2"],
        1 + r["q2"] + r["p2"] - r["p0"] - r["p1"],
    )
    return bound <= q_sum


def admissibility_forms_agree(t) -> bool:
    return weyl_product_admissible(t) == weyl_product_admissible_restated(t)


def heat_index_constants(
    p1: float, q1: float, p2: float, q2: float, nu: float = 1.0, d: int = 1
) -> HeatIndexConstants:
    """
    Constants of e^{-tL^ν}: W^{p1,q1} → W^{p2,q2}.

    Bounded iff q2 ≥ q1; the norm grows like t^{-(d/ν)/p̃} as t → 0 with
    1/p̃ = max{1/p2 - 1/p1, 0}, and decays like e^{-t d^ν} as t → ∞.
    """
    if not 0 < nu <= 1:
        raise ParameterError(f"fractional order must lie in (0, 1], got {nu}")
    for value in (p1, q1, p2, q2):
        if not value >= 1:
            raise ParameterError(f"Lebesgue exponents must be ≥ 1, got {value}")
    p_tilde = max(reciprocal(p2) - reciprocal(p1), Fraction(0))
    return HeatIndexConstants(
        admissible=q2 >= q1,
        small_time_exponent=float(d * p_tilde) / nu,
        large_time_rate=float(d) ** nu,
        p_tilde_reciprocal=float(p_tilde),
        nu=nu,
        dim=d,
    )


def lebesgue_exponent(p: float, q: float, nu: float = 1.0, d: int = 1) -> float:
    """
    Small-time exponent μ_ν of e^{-tL^ν}: L^p → L^q (1 ≤ p ≤ q ≤ ∞),
    μ_ν = max{(d/ν)(1/min(q,q') - 1/max(p,p')), 0}.
    """
    if not 1 <= p <= q:
        raise ParameterError(f"need 1 ≤ p ≤ q, got p={p}, q={q}")
    if not 0 < nu <= 1:
        raise ParameterError(f"fractional order must lie in (0, 1], got {nu}")
    inv_min_q = max(reciprocal(q), conjugate_reciprocal(q))
    inv_max_p = min(reciprocal(p), conjugate_reciprocal(p))
    return max(float(d * (inv_min_q - inv_max_p)) / nu, 0.0)
