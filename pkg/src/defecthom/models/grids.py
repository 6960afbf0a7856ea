"""Uniform grids: the periodic unit cell and closed boxes sampled node by node."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any

import numpy as np

SUPPORTED_DIMENSIONS = (1, 2, 3)


def _check_resolution(d: int, n: int):
    if d not in SUPPORTED_DIMENSIONS:
        raise ValueError(f"dimension must be 1, 2 or 3, got {d}")
    if n < 8 or n % 2:
        raise ValueError(f"points per axis must be even and at least 8, got {n}")


def _mesh(axis: np.ndarray, d: int) -> np.ndarray:
    return np.stack(np.meshgrid(*([axis] * d), indexing="ij"))


@dataclass(frozen=True)
class TorusGrid:
    """The unit cell [0, 1)^d with n points per axis, periodic in every direction."""

    d: int
    n: int

    def __post_init__(self):
        _check_resolution(self.d, self.n)
        if self.h * self.n != 1.0:
            raise ValueError(f"spacing 1/{self.n} is not exact in floating point")

    @property
    def h(self) -> float:
        """Grid spacing."""
        return 1.0 / self.n

    @property
    def shape(self) -> tuple[int, ...]:
        """Shape of a scalar sample."""
        return (self.n,) * self.d

    @property
    def cell_volume(self) -> float:
        """Quadrature weight of one node."""
        return self.h**self.d

    def axis(self) -> np.ndarray:
        """Node coordinates along one axis."""
        return np.arange(self.n) * self.h

    def coordinates(self) -> np.ndarray:
        """Node coordinates, shape (d, n, ..., n)."""
        return _mesh(self.axis(), self.d)

    def radius(self) -> np.ndarray:
        """Euclidean distance of every node from the origin."""
        return np.sqrt(np.sum(self.coordinates() ** 2, axis=0))

    def wavenumbers(self) -> np.ndarray:
        """Angular wavenumbers 2*pi*k in FFT order."""
        return 2.0 * np.pi * np.fft.fftfreq(self.n, d=self.h)

    def as_object(self) -> Any:
        """Converts class to object"""
        return {"kind": "torus", "d": self.d, "n": self.n}


class NodeGrid(ABC):
    """Closed box with n intervals per axis; boundary nodes are part of the grid."""

    d: int
    n: int

    @abstractmethod
    def bounds(self) -> tuple[float, float]:
        """Lower and upper coordinate shared by every axis."""

    @abstractmethod
    def as_object(self) -> Any:
        """Converts class to object"""

    @property
    def h(self) -> float:
        """Grid spacing."""
        lower, upper = self.bounds()
        return (upper - lower) / self.n

    @property
    def shape(self) -> tuple[int, ...]:
        """Shape of a scalar sample, boundary included."""
        return (self.n + 1,) * self.d

    @property
    def interior_shape(self) -> tuple[int, ...]:
        """Shape of the unknowns of a Dirichlet problem."""
        return (self.n - 1,) * self.d

    @property
    def cell_volume(self) -> float:
        """Quadrature weight of one node."""
        return self.h**self.d

    def axis(self) -> np.ndarray:
        """Node coordinates along one axis."""
        lower, _ = self.bounds()
        return lower + np.arange(self.n + 1) * self.h

    def coordinates(self) -> np.ndarray:
        """Node coordinates, shape (d, n + 1, ..., n + 1)."""
        return _mesh(self.axis(), self.d)

    def radius(self) -> np.ndarray:
        """Euclidean distance of every node from the origin."""
        return np.sqrt(np.sum(self.coordinates() ** 2, axis=0))

    def boundary_distance(self) -> np.ndarray:
        """Number of grid steps from every node to the nearest boundary face."""
        index = np.arange(self.n + 1)
        steps = np.minimum(index, self.n - index)
        distance = steps
        for _ in range(self.d - 1):
            distance = np.minimum.outer(distance, steps)
        return distance if self.d > 1 else steps

    def interior(self) -> tuple[slice, ...]:
        """Index of the interior nodes inside a full node array."""
        return (slice(1, -1),) * self.d


@dataclass(frozen=True)
class BoxGrid(NodeGrid):
    """The truncated whole space [-L, L]^d; n is the number of intervals per axis."""

    d: int
    L: int
    n: int

    def __post_init__(self):
        _check_resolution(self.d, self.n)
        if isinstance(self.L, bool) or int(self.L) != self.L or self.L < 1:
            raise ValueError(f"half-width must be a whole number of periods >= 1, got {self.L}")
        object.__setattr__(self, "L", int(self.L))
        if self.n % (2 * self.L):
            raise ValueError(
                f"{self.n} intervals do not split [-{self.L}, {self.L}] into whole periods"
            )

    def bounds(self) -> tuple[float, float]:
        return (-float(self.L), float(self.L))

    @property
    def nodes_per_period(self) -> int:
        """Intervals per unit length."""
        return self.n // (2 * self.L)

    @property
    def origin_index(self) -> int:
        """Index of x = 0 along every axis."""
        return self.n // 2

    def doubled(self) -> "BoxGrid":
        """The box of twice the half-width at the same spacing."""
        return BoxGrid(self.d, 2 * self.L, 2 * self.n)

    def as_object(self) -> Any:
        return {"kind": "box", "d": self.d, "L": self.L, "n": self.n}


@dataclass(frozen=True)
class DomainGrid(NodeGrid):
    """A bounded physical domain [lower, upper]^d for the oscillatory problems."""

    d: int
    lower: float
    upper: float
    n: int

    def __post_init__(self):
        _check_resolution(self.d, self.n)
        if not self.upper > self.lower:
            raise ValueError(f"empty domain [{self.lower}, {self.upper}]")

    def bounds(self) -> tuple[float, float]:
        return (float(self.lower), float(self.upper))

    def as_object(self) -> Any:
        return {
            "kind": "domain",
            "d": self.d,
            "lower": self.lower,
            "upper": self.upper,
            "n": self.n,
        }


Grid = TorusGrid | BoxGrid | DomainGrid


def grid_from_object(obj: Any) -> Grid:
    """Converts object to the matching grid class"""
    kind = obj["kind"]
    if kind == "torus":
        return TorusGrid(obj["d"], obj["n"])
    if kind == "box":
        return BoxGrid(obj["d"], obj["L"], obj["n"])
    if kind == "domain":
        return DomainGrid(obj["d"], obj["lower"], obj["upper"], obj["n"])
    raise ValueError(f'Unknown grid kind "{kind}"')
