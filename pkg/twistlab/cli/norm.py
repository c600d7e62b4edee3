"""
norm - mixed modulation/amalgam norm of a TWF1 field as one CSV row.
"""

import argparse
import logging
from pathlib import Path

from pydantic import ValidationError

from ..errors import ParameterError
from ..lattice.io import load_field
from ..phasespace.export import NORM_COLUMNS, norm_row, write_norm_rows
from ..phasespace.norms import field_norm
from ..schemas.config import RunConfig
from ..schemas.norms import MixedNormSpec
from .output import parse_exponent, write_rows

logger = logging.getLogger(__name__)


def add_norm_options(parser: argparse.ArgumentParser) -> None:
    """Norm-spec flags shared with the decay subcommand."""
    parser.add_argument("--p", type=parse_exponent, default=2.0, help="Inner exponent")
    parser.add_argument("--q", type=parse_exponent, default=2.0, help="Outer exponent")
    parser.add_argument("--s", type=float, default=0.0, help="Weight exponent")
    parser.add_argument(
        "--flavor", choices=("modulation", "amalgam"), default="modulation"
    )
    parser.add_argument(
        "--symplectic", action="store_true", help="Use the symplectic Gabor transform"
    )


def norm_spec(args: argparse.Namespace) -> MixedNormSpec:
    try:
        return MixedNormSpec(
            p=args.p, q=args.q, s=args.s, flavor=args.flavor, symplectic=args.symplectic
        )
    except ValidationError as e:
        raise ParameterError(str(e)) from e


def add_parser(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "norm", parents=parents, help="Mixed norm of a field's Gabor transform"
    )
    parser.add_argument("input", type=Path, help="Input TWF1 field")
    add_norm_options(parser)
    parser.add_argument("--output", "-o", type=Path, help="CSV path (default stdout)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    f = load_field(args.input)
    spec = norm_spec(args)
    value = field_norm(f, spec)
    row = norm_row(spec, value)
    if args.output is not None:
        args.output.parent.mkdir(parents=True, exist_ok=True)
        write_norm_rows([row], args.output)
        print(args.output)
    else:
        write_rows([row], NORM_COLUMNS)
    return 0
