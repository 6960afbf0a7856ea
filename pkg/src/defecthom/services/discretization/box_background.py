"""Periodic background and defect coefficients sampled on one box grid."""

from functools import cached_property

import numpy as np

from defecthom.models import BoxGrid, CellSolution, CoefficientSet

from .periodic_tiling import tile_periodic
from .spectral_operators import SpectralOperators


class BoxBackground:
    """Cell objects tiled onto a box, their spectral derivatives, and coefficient samples."""

    def __init__(self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid):
        if coefficients.d != grid.d or cell.d != grid.d:
            raise ValueError("coefficients, cell solution and box grid differ in dimension")
        self.coefficients = coefficients
        self.cell = cell
        self.grid = grid
        self._spectral = SpectralOperators(cell.grid)

    def _tile(self, values: np.ndarray) -> np.ndarray:
        return tile_periodic(values, self.cell.grid, self.grid)

    @cached_property
    def m_per(self) -> np.ndarray:
        """Periodic invariant measure."""
        return self._tile(self.cell.m_per.values)

    @cached_property
    def B_per(self) -> np.ndarray:
        """Periodic skew potential."""
        return self._tile(self.cell.B_per.values)

    @cached_property
    def w_per(self) -> np.ndarray:
        """Periodic correctors, shape (d, ...)."""
        return np.stack([self._tile(w.values) for w in self.cell.w_per])

    @cached_property
    def grad_w_per(self) -> np.ndarray:
        """Gradients of the periodic correctors, entry [p, j] = d_j w_p."""
        return np.stack([self._tile(self._spectral.gradient(w.values)) for w in self.cell.w_per])

    @cached_property
    def hess_w_per(self) -> np.ndarray:
        """Hessians of the periodic correctors, entry [p, i, j] = d_ij w_p."""
        return np.stack([self._tile(self._spectral.hessian(w.values)) for w in self.cell.w_per])

    @cached_property
    def a_per(self) -> np.ndarray:
        """Periodic diffusion samples."""
        return self.coefficients.sample_a_per(self.grid).values

    @cached_property
    def a_tilde(self) -> np.ndarray:
        """Diffusion defect samples."""
        return self.coefficients.sample_a_tilde(self.grid).values

    @cached_property
    def b_per(self) -> np.ndarray:
        """Periodic drift samples."""
        return self.coefficients.sample_b_per(self.grid).values

    @cached_property
    def b_tilde(self) -> np.ndarray:
        """Drift defect samples."""
        return self.coefficients.sample_b_tilde(self.grid).values

    @property
    def a(self) -> np.ndarray:
        """Full diffusion samples."""
        return self.a_per + self.a_tilde

    @property
    def b(self) -> np.ndarray:
        """Full drift samples."""
        return self.b_per + self.b_tilde

    def corrector_rhs(self, p: np.ndarray) -> np.ndarray:
        """-b_tilde.p + a_tilde : D^2 w_p,per - b_tilde . grad w_p,per for a direction p."""
        hessian = np.tensordot(p, self.hess_w_per, axes=(0, 0))
        gradient = np.tensordot(p, self.grad_w_per, axes=(0, 0))
        d = self.grid.d
        result = -np.tensordot(p, self.b_tilde, axes=(0, 0))
        for i in range(d):
            result = result + np.sum(self.a_tilde[i] * hessian[i], axis=0)
        return result - np.sum(self.b_tilde * gradient, axis=0)
