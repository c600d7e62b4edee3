"""
verify - run named identity suites and report residuals.
"""

import argparse
import logging
from pathlib import Path

from ..errors import ParameterError, VerificationError
from ..schemas.config import RunConfig
from ..verification.registry import get_registry

logger = logging.getLogger(__name__)


def add_parser(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "verify", parents=parents, help="Run verification suites (default: all)"
    )
    parser.add_argument("suites", nargs="*", help="Suite names, or 'all'")
    parser.add_argument("--list", action="store_true", help="List suites and exit")
    parser.add_argument("--format", choices=("markdown", "json"), default="markdown")
    parser.add_argument("--output", "-o", type=Path, help="Report path (default stdout)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    registry = get_registry()
    if args.list:
        for name in registry.names():
            print(f"{name:18s} {registry.suites[name][1]}")
        return 0

    names = args.suites or ["all"]
    if "all" in names:
        names = registry.names()
    unknown = [n for n in names if n not in registry.suites]
    if unknown:
        raise ParameterError(
            f"unknown suite(s) {unknown} (expected some of {registry.names()})"
        )

    reports = [registry.run(name, config) for name in names]
    text = registry.render(reports, args.format)
    if args.output is not None:
        args.output.parent.mkdir(parents=True, exist_ok=True)
        args.output.write_text(text)
        print(args.output)
    else:
        print(text)

    failed = [r.suite for r in reports if not r.passed]
    if failed:
        logger.error(f"Failed suites: {', '.join(failed)}")
        return VerificationError.exit_code
    return 0
