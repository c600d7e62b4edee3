"""
CSV output for CLI tables.

Floats are written with "%.17g" so identical runs diff cleanly.
"""

import csv
import logging
import sys
from collections.abc import Iterable
from pathlib import Path

from ..errors import ParameterError
from ..phasespace.export import format_number

logger = logging.getLogger(__name__)


def format_cell(value) -> str:
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return format_number(value)
    return str(value)


def write_rows(
    rows: Iterable[dict], columns: list[str], path: Path | None = None
) -> Path | None:
    """Write rows with a header to `path`, or to stdout when path is None."""
    formatted = [{key: format_cell(row[key]) for key in columns} for row in rows]
    if path is None:
        writer = csv.DictWriter(sys.stdout, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(formatted)
        return None
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns)
        writer.writeheader()
        writer.writerows(formatted)
    logger.info(f"Wrote {len(formatted)} rows to {path}")
    return path


def parse_index(text: str) -> tuple[int, ...]:
    """'3' or '1,2' as a multi-index."""
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParameterError(f"cannot parse multi-index '{text}'") from None


def parse_exponent(text: str) -> float:
    """Lebesgue exponent; 'inf' is accepted."""
    return float("inf") if text.lower() in ("inf", "infinity") else float(text)
