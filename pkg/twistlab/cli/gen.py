"""
gen - sample a closed-form field and write it as TWF1 with a JSON sidecar.
"""

import argparse
import logging
from pathlib import Path

from ..errors import ParameterError
from ..lattice.field import Field
from ..lattice.io import save_field, write_sidecar
from ..schemas.config import RunConfig
from ..specfun.hermite import hermite_nd
from ..specfun.special_hermite import gaussian_dilated, laguerre_kernel, special_hermite
from ..spectral_ops.flows import heat_kernel
from .output import parse_index

logger = logging.getLogger(__name__)

KINDS = ("hermite", "special_hermite", "laguerre_kernel", "gaussian", "heat_kernel")


def add_parser(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "gen",
        parents=parents,
        help="Generate a field (Hermite, special Hermite, Laguerre kernel, ...)",
    )
    parser.add_argument("kind", choices=KINDS)
    parser.add_argument("--n", default="0", help="Hermite multi-index, e.g. 3 or 1,2")
    parser.add_argument("--alpha", default="0", help="First special Hermite index")
    parser.add_argument("--beta", default="0", help="Second special Hermite index")
    parser.add_argument("--k", type=int, default=0, help="Laguerre kernel order")
    parser.add_argument("--lam", type=float, default=1.0, help="Gaussian dilation λ")
    parser.add_argument("--t", type=float, default=1.0, help="Heat kernel time")
    parser.add_argument(
        "--space",
        choices=("phase", "base"),
        default="phase",
        help="Gaussian on R^{2d} (phase) or R^d (base)",
    )
    parser.add_argument("--output", "-o", type=Path, help="Output TWF1 path")
    parser.set_defaults(handler=run)


def generate(args: argparse.Namespace, config: RunConfig) -> tuple[Field, dict]:
    """The requested field and the parameters that define it."""
    phase = config.phase_grid()
    if args.kind == "hermite":
        index = parse_index(args.n)
        return hermite_nd(index, config.base_grid()), {"n": list(index)}
    if args.kind == "special_hermite":
        alpha, beta = parse_index(args.alpha), parse_index(args.beta)
        return special_hermite(alpha, beta, phase), {"alpha": list(alpha), "beta": list(beta)}
    if args.kind == "laguerre_kernel":
        return laguerre_kernel(args.k, phase), {"k": args.k}
    if args.kind == "gaussian":
        grid = phase if args.space == "phase" else config.base_grid()
        return gaussian_dilated(args.lam, grid), {"lam": args.lam, "space": args.space}
    if args.kind == "heat_kernel":
        return heat_kernel(args.t, phase), {"t": args.t}
    raise ParameterError(f"unknown field kind '{args.kind}'")


def run(args: argparse.Namespace, config: RunConfig) -> int:
    field, params = generate(args, config)
    path = args.output or config.output_dir / f"{args.kind}.twf"
    path.parent.mkdir(parents=True, exist_ok=True)
    save_field(field, path)
    write_sidecar(
        path,
        {
            "kind": args.kind,
            "params": params,
            "grid": field.grid.describe(),
            "label": field.label,
        },
    )
    logger.info(f"Generated {field.label} on {field.grid.describe()}")
    print(path)
    return 0
