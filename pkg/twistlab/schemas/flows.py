"""
Flow parameter schemas.
"""

import math

from pydantic import BaseModel, ConfigDict, Field

# Distance of t/π from an integer below which q_t counts as singular
SINGULAR_TIME_TOLERANCE = 1e-5


class FlowParams(BaseModel):
    """Time, fractional order and oscillation exponents of a flow."""

    model_config = ConfigDict(frozen=True)

    t: float = Field(1.0, description="Time (real; heat flows need t > 0)")
    nu: float = Field(1.0, gt=0.0, description="Fractional / negative power order")
    gamma: float = Field(2.0, ge=0.0, le=2.0, description="Oscillation exponent")
    delta: float = Field(0.0, ge=0.0, description="Smoothing exponent")
    u: float = Field(1.0, gt=0.0, description="Riesz mean order")
    v: float = Field(1.0, gt=0.0, description="Riesz mean time horizon")

    @property
    def is_singular_schrodinger_time(self) -> bool:
        """t ∈ πZ, where the Schrödinger kernel degenerates."""
        ratio = self.t / math.pi
        return abs(ratio - round(ratio)) < SINGULAR_TIME_TOLERANCE
