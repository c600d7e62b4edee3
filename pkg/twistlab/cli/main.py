#!/usr/bin/env python3
"""
twistlab command line.

Subcommands gen | flow | norm | decay | verify. Settings resolve as
flags > JSON config (--config) > defaults; TWISTLAB_THREADS caps thread pools.
"""

import argparse
import logging
import os
import sys
from pathlib import Path

from pydantic import ValidationError

from ..data.defaults import THREADS_ENV
from ..errors import ConfigError, GridError, TwistlabError
from ..schemas.config import RunConfig
from ..validators.config_validator import get_validator
from . import decay, flow, gen, norm, verify

logger = logging.getLogger(__name__)

CONFIG_FLAGS = ("dim", "points", "half_width", "k_max", "truncation", "output_dir", "threads")


def common_parser() -> argparse.ArgumentParser:
    """Options every subcommand accepts."""
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("grid and run settings")
    group.add_argument("--dim", "-d", type=int, help="Base dimension d (1 or 2)")
    group.add_argument("--points", "-N", type=int, help="Samples per axis")
    group.add_argument("--half-width", "-R", type=float, help="Window half-width")
    group.add_argument("--k-max", "-K", type=int, help="Largest Hermite order")
    group.add_argument("--truncation", type=int, help="Spectral truncation order")
    group.add_argument("--output-dir", type=Path, help="Directory for outputs")
    group.add_argument("--threads", type=int, help="Thread pool cap")
    group.add_argument("--config", type=Path, help="JSON config file")
    group.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    group.add_argument("--quiet", "-q", action="store_true", help="Errors only")
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistlab",
        description="Numerics for the twisted Laplacian on phase space",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Hermite function h_3 on the default grid
  twistlab gen hermite --n 3

  # Heat flow through the kernel route
  twistlab flow heat special_hermite.twf --t 1 --route kernel

  # Fractional heat, spectral against subordination
  twistlab flow fracheat field.twf --t 1 --nu 0.5 --route both

  # Symplectic M^1 norm
  twistlab norm laguerre_kernel.twf --p 1 --q 1 --symplectic

  # Small-time exponent of the heat kernel in W^{1,1}
  twistlab decay heat-kernel --p 1 --q 1

  # All verification suites
  twistlab verify

Exit codes:
  0 = success
  2 = parameter error
  3 = grid, band-limit or truncation error
  4 = verification failure
        """,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    parents = [common_parser()]
    for module in (gen, flow, norm, decay, verify):
        module.add_parser(subparsers, parents)
    return parser


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    level = logging.DEBUG if verbose else (logging.ERROR if quiet else logging.INFO)
    logging.basicConfig(
        level=level, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )
    logging.getLogger().setLevel(level)


def load_config(args: argparse.Namespace) -> RunConfig:
    """Resolve and validate the run configuration."""
    flags = {name: getattr(args, name, None) for name in CONFIG_FLAGS}
    try:
        config = RunConfig.from_sources(flags, args.config)
    except ValidationError as e:
        raise ConfigError(f"invalid configuration: {e}") from e

    result = get_validator().validate(config)
    for warning in result.warnings:
        logger.warning(warning)
    for message in result.info:
        logger.debug(message)
    if result.has_errors:
        raise GridError(result.message)

    if config.threads is not None:
        os.environ[THREADS_ENV] = str(config.threads)
    return config


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose, args.quiet)

    try:
        config = load_config(args)
        return args.handler(args, config)

    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        return 130

    except TwistlabError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
