"""
Run configuration validator.
Checks a RunConfig against the preconditions of the numerical modules
before any computation starts.
"""

import math

from ..data.defaults import WINDOW_MARGIN
from ..schemas import RunConfig, ValidationResult
from ..spectral_ops.projections import max_resolved_order

# Singleton validator instance for convenience functions
_validator_instance = None


def get_validator() -> "ConfigValidator":
    """Get or create singleton validator instance."""
    global _validator_instance
    if _validator_instance is None:
        _validator_instance = ConfigValidator()
    return _validator_instance


def validate_config(config: RunConfig) -> tuple[bool, str]:
    """
    Validate a config and return result with error message.

    Returns:
        Tuple of (is_valid, error_message_or_empty_string)
    """
    result = get_validator().validate(config)
    return result.valid, result.message


class ConfigValidator:
    """
    Validates run configurations.

    Errors:
    - Samples per axis must be divisible by 4 (kernel lattices use N/2)
    - Estimated phase-space array must fit the memory budget
    - Twisted-convolution kernels must be alias-free: N ≥ 2R²/π

    Warnings:
    - Window smaller than the Hermite turning point plus margin
    - Truncation order above the largest order the grid resolves
    """

    BYTES_PER_SAMPLE = 16

    def validate(self, config: RunConfig) -> ValidationResult:
        """
        Validate one configuration.

        Example:
            >>> result = ConfigValidator().validate(RunConfig(dim=1, points=64))
            >>> result.valid
            True
        """
        errors = []
        warnings = []
        info = []

        grid = config.phase_grid()
        n_points = grid.points

        if n_points % 4:
            errors.append(
                f"points per axis ({n_points}) must be divisible by 4 "
                "for kernel lattices of N/2 samples"
            )

        # A phase-space field over R^{2d} has N^{4d} samples
        phase_bytes = self.BYTES_PER_SAMPLE * n_points ** (2 * grid.dim)
        if phase_bytes > config.memory_budget:
            info.append(
                f"Full phase-space arrays need {phase_bytes / 2**20:.0f} MiB; "
                "norms will be reduced slice by slice"
            )

        kernel_bytes = self.BYTES_PER_SAMPLE * n_points ** (2 * config.dim)
        if kernel_bytes > config.memory_budget:
            errors.append(
                f"Kernel matrices need {kernel_bytes / 2**20:.0f} MiB, "
                f"budget is {config.memory_budget / 2**20:.0f} MiB"
            )

        alias_floor = 2.0 * grid.half_width**2 / math.pi
        if n_points < alias_floor * (1 - 1e-12):
            errors.append(
                f"N={n_points} below the alias-free bound 2R²/π = {alias_floor:.1f}"
            )

        window = math.sqrt(2.0 * (2 * config.resolved_k_max + config.dim)) + WINDOW_MARGIN
        if grid.half_width < window:
            warnings.append(
                f"Half-width {grid.half_width:.3f} below the Hermite window "
                f"{window:.3f} for K={config.resolved_k_max}"
            )

        resolved = max_resolved_order(config.base_grid())
        if config.resolved_truncation > resolved:
            warnings.append(
                f"Truncation {config.resolved_truncation} is not resolved on this "
                f"grid; spectral sums stop at order {resolved}"
            )

        if not errors:
            info.append(f"Grid {grid.describe()} accepted")
        return ValidationResult.from_findings(errors, warnings, info)
