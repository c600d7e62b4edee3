"""Command-line interface: gen, flow, norm, decay and verify subcommands."""

from .main import build_parser, main

__all__ = ["build_parser", "main"]
