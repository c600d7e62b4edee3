"""
flow - apply a flow of L (or H) to a TWF1 field, optionally through several
routes with an agreement report.
"""

import argparse
import logging
from pathlib import Path

from ..errors import ParameterError, VerificationError
from ..lattice.field import Field, relative_error
from ..lattice.io import load_field, save_field, write_sidecar
from ..schemas.config import RunConfig
from ..spectral_ops.flows import FLOW_ROUTES, FLOWS, get_flow
from ..spectral_ops.projections import resolve_catalog
from .output import write_rows

logger = logging.getLogger(__name__)

# Flows that can act through H on R^d instead of L on R^{2d}
OPERATOR_FLOWS = ("wave", "oscmult")


def add_parser(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "flow",
        parents=parents,
        help="Apply a heat, Schrödinger, wave or multiplier flow to a field",
    )
    parser.add_argument("flow", choices=sorted(FLOWS))
    parser.add_argument("input", type=Path, help="Input TWF1 field")
    parser.add_argument("--t", type=float, default=1.0, help="Time")
    parser.add_argument("--nu", type=float, default=0.5, help="Fractional / negative order")
    parser.add_argument("--gamma", type=float, default=1.0, help="Oscillation exponent")
    parser.add_argument("--delta", type=float, default=0.0, help="Smoothing exponent")
    parser.add_argument("--u", type=float, default=1.0, help="Riesz mean order")
    parser.add_argument("--v", type=float, default=1.0, help="Riesz mean horizon")
    parser.add_argument("--velocity", type=Path, help="Initial velocity field (wave)")
    parser.add_argument(
        "--which",
        choices=("landau", "hermite"),
        default="landau",
        help="Operator for wave/oscmult",
    )
    parser.add_argument(
        "--route",
        default="spectral",
        help="A route of the flow, 'both' (spectral + first alternative) or 'all'",
    )
    parser.add_argument("--output", "-o", type=Path, help="Output TWF1 path")
    parser.set_defaults(handler=run)


def select_routes(flow: str, route: str, which: str = "landau") -> list[str]:
    """Routes to evaluate, reference route first."""
    available = FLOW_ROUTES[flow]
    if which == "hermite":
        available = ("spectral",)
    if route == "all":
        return list(available)
    if route == "both":
        if len(available) < 2:
            raise ParameterError(f"flow '{flow}' has a single route")
        return list(available[:2])
    if route not in available:
        raise ParameterError(
            f"flow '{flow}' has no route '{route}' (expected one of {list(available)})"
        )
    return [route]


def flow_params(args: argparse.Namespace, config: RunConfig, f: Field) -> dict:
    """Keyword arguments of the chosen flow, catalog included."""
    flow = args.flow
    if flow in ("heat", "schrodinger"):
        params = {"t": args.t}
    elif flow == "fracheat":
        params = {"t": args.t, "nu": args.nu}
    elif flow in ("negpow", "bessel"):
        params = {"nu": args.nu}
    elif flow == "riesz":
        params = {"u": args.u, "v": args.v}
    elif flow == "oscmult":
        params = {"t": args.t, "gamma": args.gamma, "delta": args.delta, "which": args.which}
    elif flow == "wave":
        g = load_field(args.velocity) if args.velocity else None
        params = {"g": g, "t": args.t, "which": args.which}
    else:
        raise ParameterError(f"unknown flow '{flow}'")

    base = f.grid if args.which == "hermite" and flow in OPERATOR_FLOWS else f.grid.half()
    params["catalog"] = resolve_catalog(base, config.resolved_truncation)
    return params


def run(args: argparse.Namespace, config: RunConfig) -> int:
    f = load_field(args.input)
    which = args.which if args.flow in OPERATOR_FLOWS else "landau"
    routes = select_routes(args.flow, args.route, which)
    params = flow_params(args, config, f)
    func = get_flow(args.flow)

    results = {}
    for route in routes:
        logger.info(f"Applying {args.flow} through the {route} route")
        results[route] = func(f, route=route, **params)
    reference = results[routes[0]]

    path = args.output or config.output_dir / f"{args.input.stem}_{args.flow}.twf"
    path.parent.mkdir(parents=True, exist_ok=True)
    save_field(reference, path)

    agreement = [
        {"route": route, "relative_error": relative_error(results[route], reference)}
        for route in routes[1:]
    ]
    write_sidecar(
        path,
        {
            "flow": args.flow,
            "input": str(args.input),
            "params": {k: v for k, v in params.items() if k not in ("catalog", "g")},
            "routes": routes,
            "agreement": agreement,
            "grid": reference.grid.describe(),
            "label": reference.label,
        },
    )
    print(path)

    if agreement:
        write_rows(agreement, ["route", "relative_error"])
        tolerance = config.tolerance("route_agreement")
        worst = max(row["relative_error"] for row in agreement)
        if worst > tolerance:
            raise VerificationError(
                f"routes disagree: relative error {worst:.3e} above {tolerance:.1e}"
            )
    return 0
