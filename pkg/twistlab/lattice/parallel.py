"""
Bounded thread pool for independent evaluations.

Results are returned in submission order so reductions downstream stay
deterministic. TWISTLAB_THREADS caps the number of workers.
"""

import logging
import os
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from ..data.defaults import THREADS_ENV
from ..errors import ConfigError

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def max_workers(requested: int | None = None) -> int:
    """Worker count: explicit request, else TWISTLAB_THREADS, else CPU count."""
    if requested is None:
        env = os.environ.get(THREADS_ENV)
        try:
            requested = int(env) if env else (os.cpu_count() or 1)
        except ValueError:
            raise ConfigError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    return max(1, requested)


def ordered_map(
    func: Callable[[T], R], items: Iterable[T], workers: int | None = None
) -> list[R]:
    """
    Map func over items on a thread pool, preserving input order.

    Exceptions raised by func propagate to the caller.
    """
    items = list(items)
    if not items:
        return []
    n_workers = min(len(items), max_workers(workers))
    if n_workers == 1:
        return [func(item) for item in items]
    logger.debug(f"Evaluating {len(items)} items on {n_workers} threads")
    with ThreadPoolExecutor(max_workers=n_workers) as executor:
        return list(executor.map(func, items))
