"""
Phase-space field and norm-row export.
"""

import csv
import logging
from pathlib import Path

from ..errors import FieldFormatError
from ..lattice.io import read_container, write_container
from ..schemas.grid import GridSpec
from ..schemas.norms import MixedNormSpec
from .field import PhaseSpaceField

logger = logging.getLogger(__name__)

NORM_COLUMNS = ["p", "q", "s", "flavor", "symplectic", "value"]


def _block(grid: GridSpec) -> dict:
    return {"dim": grid.dim, "points": grid.points, "half_width": grid.half_width}


def save_phase_space(F: PhaseSpaceField, path: Path) -> Path:
    """TWF1 container with a two-block header (position, frequency)."""
    header = {
        "kind": "phase-space",
        "dim": F.position.dim + F.frequency.dim,
        "points": F.position.points,
        "half_width": F.position.half_width,
        "label": F.label,
        "position": _block(F.position),
        "frequency": _block(F.frequency),
    }
    write_container(path, header, F.materialize())
    return Path(path)


def load_phase_space(path: Path) -> PhaseSpaceField:
    header, samples = read_container(path)
    if header.get("kind") != "phase-space":
        raise FieldFormatError(f"{path}: not a phase-space container")
    position = GridSpec(**header["position"])
    frequency = GridSpec(**header["frequency"])
    if samples.size != position.size * frequency.size:
        raise FieldFormatError(f"{path}: sample count does not match the two blocks")
    return PhaseSpaceField.from_array(position, frequency, samples, header.get("label", ""))


def format_number(value: float) -> str:
    return "%.17g" % value


def norm_row(spec: MixedNormSpec, value: float) -> dict[str, str]:
    row = {key: str(v) for key, v in spec.as_row().items()}
    for key in ("p", "q", "s"):
        row[key] = format_number(float(spec.as_row()[key]))
    row["value"] = format_number(value)
    return row


def write_norm_rows(rows: list[dict[str, str]], path: Path) -> Path:
    """CSV with a fixed header and "%.17g" numbers."""
    path = Path(path)
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=NORM_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    logger.debug(f"Wrote {len(rows)} norm rows to {path}")
    return path
