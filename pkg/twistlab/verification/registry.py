"""
Verification registry - named suites of numerical identity checks.

Each suite returns CheckResults with the measured residual next to its
tolerance. The registry runs suites, isolates failures of individual suites
and renders reports as markdown (Jinja2) or JSON.
"""

import json
import logging
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Literal

from jinja2 import Environment, FileSystemLoader, TemplateError

from ..errors import ParameterError, VerificationError
from ..schemas.config import RunConfig

logger = logging.getLogger(__name__)

SuiteFunc = Callable[[RunConfig], list["CheckResult"]]


@dataclass
class CheckResult:
    """One identity check: measured residual against its tolerance."""

    name: str
    residual: float
    tolerance: float
    detail: str = ""
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and self.residual <= self.tolerance

    @property
    def status(self) -> str:
        if self.error is not None:
            return "ERROR"
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "status": self.status,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "detail": self.detail,
            "error": self.error,
        }


def check(name: str, residual: float, tolerance: float, detail: str = "") -> CheckResult:
    return CheckResult(name, float(residual), float(tolerance), detail)


@dataclass
class SuiteReport:
    """Results of one suite run."""

    suite: str
    description: str
    checks: list[CheckResult] = field(default_factory=list)
    timestamp: datetime = field(default_factory=datetime.now)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    @property
    def failed_count(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "description": self.description,
            "timestamp": self.timestamp.isoformat(),
            "elapsed_seconds": self.elapsed,
            "passed": self.passed,
            "failed": self.failed_count,
            "checks": [c.to_dict() for c in self.checks],
        }


class VerificationRegistry:
    """
    Registry of verification suites.

    Usage:
        registry = VerificationRegistry()
        registry.register("eigen", run_eigen, "Eigenrelations of H and L")
        report = registry.run("eigen", RunConfig())
        if not report.passed:
            print(registry.render([report]))
    """

    def __init__(self, template_dir: Path | None = None):
        self.suites: dict[str, tuple[SuiteFunc, str]] = {}
        if template_dir is None:
            template_dir = Path(__file__).parent.parent / "templates"
        self.env = Environment(
            loader=FileSystemLoader(str(template_dir)),
            trim_blocks=True,
            lstrip_blocks=True,
            autoescape=False,
        )

    def register(self, name: str, func: SuiteFunc, description: str = "") -> None:
        self.suites[name] = (func, description)

    def names(self) -> list[str]:
        return list(self.suites)

    def run(self, name: str, config: RunConfig) -> SuiteReport:
        """Run one suite; an exception inside it becomes an ERROR check."""
        if name not in self.suites:
            raise ParameterError(
                f"unknown verification suite '{name}' (expected one of {self.names()})"
            )
        func, description = self.suites[name]
        report = SuiteReport(suite=name, description=description)
        start = time.perf_counter()
        try:
            report.checks = func(config)
        except Exception as e:
            logger.error(f"Suite {name} raised: {e}")
            report.checks = [
                CheckResult(name, float("inf"), 0.0, error=f"{type(e).__name__}: {e}")
            ]
        report.elapsed = time.perf_counter() - start
        logger.info(
            f"Suite {name}: {len(report.checks) - report.failed_count}/"
            f"{len(report.checks)} checks passed in {report.elapsed:.1f}s"
        )
        return report

    def run_all(self, config: RunConfig) -> list[SuiteReport]:
        return [self.run(name, config) for name in self.suites]

    def render(
        self, reports: list[SuiteReport], fmt: Literal["markdown", "json"] = "markdown"
    ) -> str:
        if fmt == "json":
            return json.dumps([r.to_dict() for r in reports], indent=2)
        try:
            template = self.env.get_template("verify_report.md.j2")
            return template.render(
                reports=reports,
                all_passed=all(r.passed for r in reports),
                generated_at=datetime.now(),
            )
        except TemplateError as e:
            raise VerificationError(f"cannot render verification report: {e}") from e


# Singleton registry with the built-in suites
_registry_instance: VerificationRegistry | None = None


def get_registry() -> VerificationRegistry:
    """Get or create the registry holding the built-in suites."""
    global _registry_instance
    if _registry_instance is None:
        from .suites import register_builtin_suites

        _registry_instance = VerificationRegistry()
        register_builtin_suites(_registry_instance)
    return _registry_instance
