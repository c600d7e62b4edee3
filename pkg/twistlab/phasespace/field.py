"""
Lazy phase-space fields.

A PhaseSpaceField is a function on (position lattice) × (frequency lattice)
evaluated one position slice at a time. Norms reduce slice by slice; the full
N^n × N^n array is built only on request and only within the memory budget.
"""

import itertools
import logging
import math
from collections.abc import Callable, Iterator

import numpy as np

from ..data.defaults import MEMORY_BUDGET_BYTES
from ..errors import MemoryBudgetError
from ..schemas.grid import GridSpec

logger = logging.getLogger(__name__)

SliceFunction = Callable[[tuple[int, ...]], np.ndarray]


class PhaseSpaceField:
    """F(x, ξ) with x on `position` and ξ on `frequency`."""

    BYTES_PER_SAMPLE = 16

    def __init__(
        self,
        position: GridSpec,
        frequency: GridSpec,
        slice_fn: SliceFunction,
        label: str = "",
        memory_budget: int = MEMORY_BUDGET_BYTES,
    ):
        self.position = position
        self.frequency = frequency
        self._slice_fn = slice_fn
        self.label = label
        self.memory_budget = memory_budget

    @classmethod
    def from_array(
        cls,
        position: GridSpec,
        frequency: GridSpec,
        values: np.ndarray,
        label: str = "",
    ) -> "PhaseSpaceField":
        values = np.asarray(values, dtype=np.complex128).reshape(
            position.shape + frequency.shape
        )
        return cls(position, frequency, lambda idx: values[idx], label)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.position.shape + self.frequency.shape

    @property
    def nbytes(self) -> int:
        return self.BYTES_PER_SAMPLE * self.position.size * self.frequency.size

    @property
    def weight(self) -> float:
        """Quadrature weight of one phase-space sample."""
        return self.position.weight * self.frequency.weight

    def at(self, index: tuple[int, ...]) -> np.ndarray:
        """Frequency slice at one position index."""
        return np.asarray(self._slice_fn(tuple(index)))

    def position_indices(self, stride: int = 1) -> Iterator[tuple[int, ...]]:
        axes = [range(0, self.position.points, stride)] * self.position.dim
        return itertools.product(*axes)

    def slices(self, stride: int = 1) -> Iterator[tuple[tuple[int, ...], np.ndarray]]:
        """Yield (position index, frequency slice) in row-major order."""
        for idx in self.position_indices(stride):
            yield idx, self.at(idx)

    def materialize(self) -> np.ndarray:
        """Full array of shape position.shape + frequency.shape."""
        if self.nbytes > self.memory_budget:
            stride = math.ceil(
                (self.nbytes / self.memory_budget) ** (1.0 / self.position.dim)
            )
            raise MemoryBudgetError(
                f"phase-space field '{self.label}' needs {self.nbytes / 2**20:.0f} MiB "
                f"(budget {self.memory_budget / 2**20:.0f} MiB); reduce slice-wise "
                f"or evaluate positions with stride {stride}"
            )
        out = np.empty(self.shape, dtype=np.complex128)
        for idx, values in self.slices():
            out[idx] = values
        return out

    def map(
        self,
        func: Callable[[tuple[int, ...], np.ndarray], np.ndarray],
        label: str = "",
    ) -> "PhaseSpaceField":
        """Lazy pointwise transform of every slice."""
        return PhaseSpaceField(
            self.position,
            self.frequency,
            lambda idx: func(idx, self.at(idx)),
            label or self.label,
            self.memory_budget,
        )
