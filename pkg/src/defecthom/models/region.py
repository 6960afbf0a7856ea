"""Node subsets over which norms are taken."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .grids import Grid, NodeGrid


@dataclass(frozen=True)
class Region:
    """Whole grid, ball |x| < outer, annulus inner <= |x| < outer, or a box minus a collar."""

    inner: Optional[float] = None
    outer: Optional[float] = None
    collar: Optional[float] = None

    @classmethod
    def whole(cls):
        """Every node of the grid."""
        return Region()

    @classmethod
    def ball(cls, radius: float):
        """Nodes with |x| <= radius."""
        return Region(None, float(radius))

    @classmethod
    def annulus(cls, inner: float, outer: float):
        """Nodes with inner <= |x| < outer."""
        if not outer > inner >= 0.0:
            raise ValueError(f"invalid annulus [{inner}, {outer})")
        return Region(float(inner), float(outer))

    @classmethod
    def interior(cls, collar: float):
        """Nodes at distance >= collar from every face of a box grid."""
        if not collar >= 0.0:
            raise ValueError(f"invalid collar width {collar}")
        return Region(collar=float(collar))

    @property
    def is_whole(self) -> bool:
        """True for the whole grid."""
        return self.inner is None and self.outer is None and self.collar is None

    def mask(self, grid: Grid) -> np.ndarray:
        """Boolean selection of the region's nodes."""
        if self.is_whole:
            return np.ones(grid.shape, dtype=bool)
        if self.collar is not None:
            if not isinstance(grid, NodeGrid):
                raise ValueError("a boundary collar needs a box grid")
            lower, upper = grid.bounds()
            coordinates = grid.coordinates()
            slack = 1e-9 * grid.h
            inside = (coordinates - lower >= self.collar - slack) & (
                upper - coordinates >= self.collar - slack
            )
            return np.all(inside, axis=0)
        radius = grid.radius()
        if self.inner is None:
            return radius <= self.outer
        return (radius >= self.inner) & (radius < self.outer)

    def describe(self) -> str:
        """Readable form for messages."""
        if self.is_whole:
            return "whole grid"
        if self.collar is not None:
            return f"interior beyond a collar of width {self.collar:g}"
        if self.inner is None:
            return f"ball |x| <= {self.outer:g}"
        return f"annulus {self.inner:g} <= |x| < {self.outer:g}"
