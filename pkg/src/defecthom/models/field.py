"""Field data model: a sampled scalar, vector or matrix function on a grid."""

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .grids import Grid


@dataclass(frozen=True, eq=False)
class Field:
    """Samples of a rank 0, 1 or 2 function; component indices come before node indices."""

    grid: Grid
    rank: int
    values: np.ndarray
    symmetric: bool = False
    skew: bool = False
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.rank not in (0, 1, 2):
            raise ValueError(f"rank must be 0, 1 or 2, got {self.rank}")
        values = np.array(self.values, dtype=np.float64, copy=True)
        expected = (self.grid.d,) * self.rank + self.grid.shape
        if values.shape != expected:
            raise ValueError(f"values shape {values.shape} does not match {expected}")
        if not np.all(np.isfinite(values)):
            raise ValueError("field values must be finite")
        if (self.symmetric or self.skew) and self.rank != 2:
            raise ValueError("symmetry flags apply to rank 2 fields only")
        if self.symmetric and self.skew:
            raise ValueError("a field cannot be flagged both symmetric and skew")
        if self.symmetric and not np.array_equal(values, np.swapaxes(values, 0, 1)):
            raise ValueError("field flagged symmetric is not symmetric")
        if self.skew and not np.array_equal(values, -np.swapaxes(values, 0, 1)):
            raise ValueError("field flagged skew is not skew")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def scalar(cls, grid: Grid, values: np.ndarray, label: str = ""):
        """Rank 0 field."""
        return Field(grid, 0, values, label=label)

    @classmethod
    def vector(cls, grid: Grid, values: np.ndarray, label: str = ""):
        """Rank 1 field."""
        return Field(grid, 1, values, label=label)

    @classmethod
    def matrix(cls, grid: Grid, values: np.ndarray, label: str = ""):
        """Rank 2 field without symmetry flags."""
        return Field(grid, 2, values, label=label)

    @classmethod
    def symmetrized(cls, grid: Grid, values: np.ndarray, label: str = ""):
        """Rank 2 field built from (M + M^T)/2 and flagged symmetric."""
        values = np.asarray(values, dtype=np.float64)
        symmetric = 0.5 * (values + np.swapaxes(values, 0, 1))
        return Field(grid, 2, symmetric, symmetric=True, label=label)

    @classmethod
    def skew_part(cls, grid: Grid, values: np.ndarray, label: str = ""):
        """Rank 2 field built from (M - M^T)/2 and flagged skew."""
        values = np.asarray(values, dtype=np.float64)
        return Field(grid, 2, 0.5 * (values - np.swapaxes(values, 0, 1)), skew=True, label=label)

    @classmethod
    def zeros(cls, grid: Grid, rank: int = 0, label: str = ""):
        """Zero field of the given rank."""
        shape = (grid.d,) * rank + grid.shape
        return Field(grid, rank, np.zeros(shape), label=label)

    def component(self, *index: int) -> "Field":
        """Rank 0 field of one component."""
        if len(index) != self.rank:
            raise ValueError(f"rank {self.rank} field needs {self.rank} component indices")
        return Field(self.grid, 0, self.values[index], label=self.label)

    def magnitude(self) -> np.ndarray:
        """Pointwise absolute value, Euclidean length or Frobenius norm."""
        if self.rank == 0:
            return np.abs(self.values)
        axes = tuple(range(self.rank))
        return np.sqrt(np.sum(self.values**2, axis=axes))

    def with_values(self, values: np.ndarray, label: str | None = None) -> "Field":
        """Same grid and rank, new samples; symmetry flags are dropped."""
        return Field(self.grid, self.rank, values, label=self.label if label is None else label)

    def max_abs(self) -> float:
        """Largest pointwise magnitude."""
        return float(np.max(self.magnitude()))

    def _check_compatible(self, other: "Field"):
        if other.grid != self.grid or other.rank != self.rank:
            raise ValueError("fields live on different grids or have different ranks")

    def __add__(self, other: "Field") -> "Field":
        self._check_compatible(other)
        return self.with_values(self.values + other.values)

    def __sub__(self, other: "Field") -> "Field":
        self._check_compatible(other)
        return self.with_values(self.values - other.values)

    def __mul__(self, factor: float) -> "Field":
        return Field(
            self.grid,
            self.rank,
            self.values * float(factor),
            symmetric=self.symmetric,
            skew=self.skew,
            label=self.label,
        )

    __rmul__ = __mul__

    def as_object(self) -> Any:
        """Converts the field metadata to object; values travel separately."""
        return {
            "grid": self.grid.as_object(),
            "rank": self.rank,
            "symmetric": self.symmetric,
            "skew": self.skew,
            "label": self.label,
            "shape": list(self.values.shape),
        }
