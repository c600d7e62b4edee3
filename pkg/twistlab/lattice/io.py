"""
TWF1 field container.

Layout: one line of UTF-8 JSON header, a newline, then the complex samples
as little-endian float64 (re, im) pairs in row-major order. A JSON sidecar
`<name>.json` carries generation metadata for CLI outputs.
"""

import json
import logging
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import ValidationError

from ..errors import FieldFormatError
from ..schemas.grid import GridSpec
from .field import Field

logger = logging.getLogger(__name__)

MAGIC = "TWF1"
SAMPLE_DTYPE = np.dtype("<c16")


def write_container(path: Path, header: dict[str, Any], values: np.ndarray) -> None:
    """Write a header line and raw little-endian samples."""
    path = Path(path)
    payload = np.ascontiguousarray(values, dtype=SAMPLE_DTYPE).tobytes(order="C")
    with open(path, "wb") as fh:
        fh.write(json.dumps({"magic": MAGIC, **header}).encode("utf-8"))
        fh.write(b"\n")
        fh.write(payload)
    logger.debug(f"Wrote {values.size} samples to {path}")


def read_container(path: Path) -> tuple[dict[str, Any], np.ndarray]:
    """Read a TWF1 header and its flat sample array."""
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise FieldFormatError(f"cannot read {path}: {e}") from e
    newline = raw.find(b"\n")
    if newline < 0:
        raise FieldFormatError(f"{path}: missing header line")
    try:
        header = json.loads(raw[:newline].decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise FieldFormatError(f"{path}: malformed header: {e}") from e
    if header.get("magic") != MAGIC:
        raise FieldFormatError(f"{path}: bad magic {header.get('magic')!r}")
    body = raw[newline + 1 :]
    if len(body) % SAMPLE_DTYPE.itemsize:
        raise FieldFormatError(f"{path}: truncated sample payload")
    return header, np.frombuffer(body, dtype=SAMPLE_DTYPE)


def field_header(field: Field) -> dict[str, Any]:
    return {
        "dim": field.grid.dim,
        "points": field.grid.points,
        "half_width": field.grid.half_width,
        "label": field.label,
    }


def save_field(field: Field, path: Path) -> Path:
    """Write a Field as TWF1."""
    write_container(path, field_header(field), field.values)
    return Path(path)


def load_field(path: Path) -> Field:
    """Read a TWF1 Field; bit-exact inverse of save_field."""
    header, samples = read_container(path)
    if header.get("kind", "field") != "field":
        raise FieldFormatError(f"{path}: container holds a {header['kind']}, not a field")
    try:
        grid = GridSpec(
            dim=header["dim"], points=header["points"], half_width=header["half_width"]
        )
    except KeyError as e:
        raise FieldFormatError(f"{path}: header lacks {e}") from e
    except ValidationError as e:
        raise FieldFormatError(f"{path}: invalid grid in header: {e}") from e
    if samples.size != grid.size:
        raise FieldFormatError(
            f"{path}: {samples.size} samples for a grid of {grid.size}"
        )
    return Field(grid, samples.reshape(grid.shape), header.get("label", ""))


def write_sidecar(path: Path, metadata: dict[str, Any]) -> Path:
    """Write `<path>.json` next to an output file."""
    sidecar = Path(path).with_suffix(Path(path).suffix + ".json")
    sidecar.write_text(json.dumps(metadata, indent=2, sort_keys=True, default=str))
    return sidecar
