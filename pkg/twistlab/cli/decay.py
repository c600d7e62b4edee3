"""
decay - sweep a norm over time and fit its small-time exponent and
large-time rate.

Witnesses:
    flow           ‖flow_t f‖ / ‖f‖ for an input field
    ground-state   ‖e^{-tL}Φ_{0,0}‖ / ‖Φ_{0,0}‖
    heat-kernel    ‖p_t‖ in closed form
    fracheat       subordinated bound on the fractional heat kernel
"""

import argparse
import json
import logging
from pathlib import Path

import numpy as np

from ..errors import ParameterError
from ..lattice.io import load_field, write_sidecar
from ..schemas.config import RunConfig
from ..spectral_ops.decay import (
    DecayRow,
    decay_sweep,
    fit_large_time_rate,
    fit_small_time_exponent,
    fractional_heat_sweep,
    ground_state_sweep,
    heat_kernel_sweep,
)
from ..spectral_ops.projections import resolve_catalog
from .norm import add_norm_options, norm_spec
from .output import write_rows

logger = logging.getLogger(__name__)

WITNESSES = ("flow", "ground-state", "heat-kernel", "fracheat")
# Flows whose second positional parameter is the time t
TIME_FLOWS = ("heat", "fracheat", "schrodinger", "oscmult")
MIN_FIT_POINTS = 3


def add_parser(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "decay", parents=parents, help="Norm-versus-time sweeps and exponent fits"
    )
    parser.add_argument("witness", choices=WITNESSES)
    parser.add_argument("--input", type=Path, help="Input TWF1 field (flow witness)")
    parser.add_argument("--flow", choices=TIME_FLOWS, default="heat")
    parser.add_argument("--route", default="spectral", help="Flow route")
    parser.add_argument("--nu", type=float, help="Fractional order (fracheat flow)")
    parser.add_argument("--t-min", type=float, default=1e-3)
    parser.add_argument("--t-max", type=float, default=1e-1)
    parser.add_argument("--n-times", type=int, default=20)
    parser.add_argument(
        "--linear", action="store_true", help="Linearly spaced times (default log)"
    )
    parser.add_argument(
        "--small-cutoff", type=float, default=0.1, help="Small-time fit uses t ≤ this"
    )
    parser.add_argument(
        "--large-cutoff", type=float, default=1.0, help="Large-time fit uses t ≥ this"
    )
    parser.add_argument(
        "--lp", action="store_true", help="Flow witness: L² ratio instead of a mixed norm"
    )
    add_norm_options(parser)
    parser.add_argument("--output", "-o", type=Path, help="CSV path")
    parser.set_defaults(handler=run)


def sweep_times(args: argparse.Namespace) -> np.ndarray:
    if not 0 < args.t_min < args.t_max or args.n_times < 2:
        raise ParameterError(
            f"degenerate sweep: t in [{args.t_min}, {args.t_max}], {args.n_times} times"
        )
    if args.linear:
        return np.linspace(args.t_min, args.t_max, args.n_times)
    return np.logspace(np.log10(args.t_min), np.log10(args.t_max), args.n_times)


def sweep(args: argparse.Namespace, config: RunConfig, ts: np.ndarray) -> list[DecayRow]:
    spec = norm_spec(args)
    if args.witness == "heat-kernel":
        return heat_kernel_sweep(ts, spec, config.dim)
    if args.witness == "fracheat":
        return fractional_heat_sweep(ts, spec, config.dim)
    if args.witness == "ground-state":
        return ground_state_sweep(ts, config.phase_grid(), args.route)
    if args.input is None:
        raise ParameterError("the flow witness needs --input")
    f = load_field(args.input)
    params = {
        "route": args.route,
        "catalog": resolve_catalog(f.grid.half(), config.resolved_truncation),
    }
    if args.nu is not None:
        params["nu"] = args.nu
    return decay_sweep(args.flow, f, ts, None if args.lp else spec, **params)


def fit(rows: list[DecayRow], small_cutoff: float, large_cutoff: float) -> dict:
    """Fits over the windows that hold enough points; None otherwise."""
    small = [r for r in rows if r.t <= small_cutoff]
    large = [r for r in rows if r.t >= large_cutoff]
    fits: dict[str, float | None] = {"small_time_exponent": None, "large_time_rate": None}
    if len(small) >= MIN_FIT_POINTS:
        fits["small_time_exponent"] = fit_small_time_exponent(
            [r.t for r in small], [r.value for r in small]
        )
    if len(large) >= MIN_FIT_POINTS:
        fits["large_time_rate"] = fit_large_time_rate(
            [r.t for r in large], [r.value for r in large]
        )
    if all(v is None for v in fits.values()):
        logger.warning("No fit window holds three times; only the table is written")
    return fits


def run(args: argparse.Namespace, config: RunConfig) -> int:
    ts = sweep_times(args)
    rows = sweep(args, config, ts)
    fits = fit(rows, args.small_cutoff, args.large_cutoff)

    path = args.output or config.output_dir / f"decay_{args.witness}.csv"
    write_rows([r.to_dict() for r in rows], ["t", "value"], path)
    write_sidecar(
        path,
        {
            "witness": args.witness,
            "flow": args.flow if args.witness == "flow" else None,
            "norm": norm_spec(args).as_row(),
            "fits": fits,
        },
    )
    print(path)
    print(json.dumps(fits, indent=2))
    return 0
