"""Imports for the interface definition."""

from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from defecthom.models import CellSolution, CoefficientSet, Field, OperationResult, TorusGrid


class CellServiceContract(ABC):
    """Periodic cell problems of the non-divergence operator -a_ij d_ij + b_j d_j."""

    @abstractmethod
    def solve_invariant_measure(
        self, coefficients: CoefficientSet, grid: TorusGrid
    ) -> OperationResult[Field]:
        """Positive periodic m_per with <m_per> = 1 solving the adjoint equation."""

    @abstractmethod
    def drift(self, m_per: Field, coefficients: CoefficientSet) -> OperationResult[np.ndarray]:
        """The vector <m_per b_per>; periodic correctors exist only when it vanishes."""

    @abstractmethod
    def solve_corrector_periodic(
        self,
        coefficients: CoefficientSet,
        grid: TorusGrid,
        p: np.ndarray,
        m_per: Optional[Field] = None,
    ) -> OperationResult[Field]:
        """Zero-mean periodic w_p with -a_ij d_ij w + b_j d_j w = -b.p."""

    @abstractmethod
    def solve_B_periodic(
        self, coefficients: CoefficientSet, grid: TorusGrid, m_per: Field
    ) -> OperationResult[Field]:
        """Zero-mean skew B_per whose column divergence is m_per b_per + div(m_per a_per)."""

    @abstractmethod
    def homogenized_tensor(
        self, cell: CellSolution, coefficients: CoefficientSet
    ) -> OperationResult[tuple[np.ndarray, float]]:
        """A* from the divergence form and the discrepancy to the non-divergence average."""

    @abstractmethod
    def solve_all(
        self, coefficients: CoefficientSet, grid: TorusGrid
    ) -> OperationResult[CellSolution]:
        """Measure, drift, correctors, skew potential and homogenized tensor."""
