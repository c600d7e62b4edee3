"""Validators for twistlab run configurations."""

from .config_validator import ConfigValidator, get_validator, validate_config

__all__ = ["ConfigValidator", "get_validator", "validate_config"]
