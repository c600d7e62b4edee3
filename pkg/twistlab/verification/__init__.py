"""Named verification suites of numerical identities."""

from .fields import gaussian_mixture, hermite_tensor_mixture
from .registry import (
    CheckResult,
    SuiteReport,
    VerificationRegistry,
    check,
    get_registry,
)

__all__ = [
    "CheckResult",
    "SuiteReport",
    "VerificationRegistry",
    "check",
    "gaussian_mixture",
    "get_registry",
    "hermite_tensor_mixture",
]
