"""
Norm and index schemas.

Handles mixed-norm settings for the Gabor-side norms and the index
tuples fed to the Weyl-product and heat boundedness conditions.
"""

import math
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


def reciprocal(p: float) -> Fraction:
    """Exact 1/p with 1/∞ = 0 (p given as float, e.g. 4/3 → 3/4)."""
    if math.isinf(p):
        return Fraction(0)
    return 1 / Fraction(p).limit_denominator(10_000)


def conjugate_reciprocal(p: float) -> Fraction:
    """Exact 1/p' where 1/p + 1/p' = 1."""
    return 1 - reciprocal(p)


class MixedNormSpec(BaseModel):
    """
    Weighted mixed Lebesgue norm of a phase-space field.

    modulation: inner L^p over the position block, outer L^q over frequency.
    amalgam: inner L^p over the frequency block, outer L^q over position.
    """

    model_config = ConfigDict(frozen=True)

    p: float = Field(1.0, ge=1.0, description="Inner exponent")
    q: float = Field(1.0, ge=1.0, description="Outer exponent")
    s: float = Field(0.0, description="Weight exponent of (1+|x|²+|ξ|²)^{s/2}")
    flavor: Literal["modulation", "amalgam"] = "modulation"
    symplectic: bool = Field(False, description="Use the symplectic Gabor transform")

    def swapped(self) -> "MixedNormSpec":
        """Same exponents with the other integration order."""
        other = "amalgam" if self.flavor == "modulation" else "modulation"
        return self.model_copy(update={"flavor": other})

    def as_row(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "s": self.s,
            "flavor": self.flavor,
            "symplectic": int(self.symplectic),
        }


class IndexTuple(BaseModel):
    """Exponents (p0,q0,p1,q1,p2,q2) of a Weyl-product continuity estimate."""

    model_config = ConfigDict(frozen=True)

    p0: float = Field(..., ge=1.0)
    q0: float = Field(..., ge=1.0)
    p1: float = Field(..., ge=1.0)
    q1: float = Field(..., ge=1.0)
    p2: float = Field(..., ge=1.0)
    q2: float = Field(..., ge=1.0)

    @classmethod
    def from_sequence(cls, values) -> "IndexTuple":
        p0, q0, p1, q1, p2, q2 = values
        return cls(p0=p0, q0=q0, p1=p1, q1=q1, p2=p2, q2=q2)

    def reciprocals(self) -> dict[str, Fraction]:
        return {name: reciprocal(value) for name, value in self.model_dump().items()}


class HeatIndexConstants(BaseModel):
    """Admissibility and time exponents of e^{-tL^ν}: W^{p1,q1} → W^{p2,q2}."""

    admissible: bool = Field(..., description="q2 ≥ q1")
    small_time_exponent: float = Field(
        ..., ge=0.0, description="(d/ν)·max{1/p2 - 1/p1, 0}: blow-up t^{-exponent}"
    )
    large_time_rate: float = Field(..., gt=0.0, description="Decay rate d^ν")
    p_tilde_reciprocal: float = Field(..., ge=0.0, description="1/p̃")
    nu: float = Field(..., gt=0.0, le=1.0)
    dim: int = Field(1, ge=1)
