"""
Validation result schema shared by the config validator and the CLI.
"""

from datetime import datetime
from typing import Literal

from pydantic import BaseModel, Field

Severity = Literal["fail", "warn", "info"]


class ValidationResult(BaseModel):
    """Outcome of checking a run configuration against grid and budget rules."""

    valid: bool = Field(..., description="False when any precondition fails")
    severity: Severity = Field(..., description="Worst finding: fail, warn or info")
    errors: list[str] = Field(default_factory=list, description="Failed preconditions")
    warnings: list[str] = Field(
        default_factory=list, description="Accuracy concerns that do not block a run"
    )
    info: list[str] = Field(default_factory=list, description="Notes for debug logging")
    validated_at: datetime = Field(default_factory=datetime.now)

    @classmethod
    def from_findings(
        cls, errors: list[str], warnings: list[str], info: list[str]
    ) -> "ValidationResult":
        """Derive validity and severity from the collected findings."""
        severity: Severity = "fail" if errors else ("warn" if warnings else "info")
        return cls(
            valid=not errors,
            severity=severity,
            errors=errors,
            warnings=warnings,
            info=info,
        )

    @property
    def has_errors(self) -> bool:
        return len(self.errors) > 0

    @property
    def has_warnings(self) -> bool:
        return len(self.warnings) > 0

    @property
    def message(self) -> str:
        """Errors joined for a single-line report; empty when valid."""
        return "; ".join(self.errors)
