"""Imports for the interface definition."""

from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from defecthom.models import (
    BoxGrid,
    CellSolution,
    CoefficientSet,
    DecayExponents,
    DecayReport,
    DefectSolution,
    Evaluator,
    Field,
    OperationResult,
    ProbeReport,
)

DECAY_OBJECTS = ("m_tilde", "grad_w_tilde", "B_tilde")


class DefectServiceContract(ABC):
    """Box solves for the perturbations induced by a localized defect."""

    @abstractmethod
    def decay_exponents(self, coefficients: CoefficientSet) -> DecayExponents:
        """q*, q' and alpha of the corrector gradients, the measure and the skew potential."""

    @abstractmethod
    def assemble_measure_rhs(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[Field]:
        """d_ij (a~_ij m_per) + d_i (b~_i m_per) on the box, linear in the defect."""

    @abstractmethod
    def solve_invariant_defect(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[Field]:
        """m~ with zero boundary values; m_per + m~ must stay positive."""

    @abstractmethod
    def solve_corrector_defect(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid, p: np.ndarray
    ) -> OperationResult[Field]:
        """w~_p with zero boundary values."""

    @abstractmethod
    def solve_correctors_defect(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[tuple[Field, ...]]:
        """w~_p for p = e_1, ..., e_d sharing one factorization."""

    @abstractmethod
    def solve_B_defect(
        self, coefficients: CoefficientSet, cell: CellSolution, m_tilde: Field, grid: BoxGrid
    ) -> OperationResult[Field]:
        """Skew B~ from componentwise Dirichlet Poisson problems."""

    @abstractmethod
    def solve_B_defect_convolution(
        self,
        coefficients: CoefficientSet,
        cell: CellSolution,
        m_tilde: Field,
        grid: BoxGrid,
        reference: Optional[Field] = None,
    ) -> OperationResult[tuple[Field, Optional[float]]]:
        """Whole-space B~ by Newtonian convolution in d = 3, compared with a reference."""

    @abstractmethod
    def newtonian_skew_potential(self, flux: Field) -> OperationResult[Field]:
        """B_ij = K_i * F_j - K_j * F_i with K(x) = x / (4 pi |x|^3)."""

    @abstractmethod
    def estimate_constant_probe(
        self,
        coefficients: CoefficientSet,
        grid: BoxGrid,
        q: float,
        rhs: list[tuple[str, Evaluator]],
    ) -> OperationResult[ProbeReport]:
        """Ratios (|D2 u|_q* + |grad u|_q*) / |f|_{q, q*} on the box and the doubled box."""

    @abstractmethod
    def decay_report(self, solution: DefectSolution, which: str) -> OperationResult[DecayReport]:
        """Shell norms at the theoretical exponent of m_tilde, grad_w_tilde or B_tilde."""

    @abstractmethod
    def truncation_consistency(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[float]:
        """Relative L2 change of grad w~ on |x| <= L/2 when the box doubles."""

    @abstractmethod
    def decay_stability(
        self, coefficients: CoefficientSet, cell: CellSolution, solution: DefectSolution
    ) -> OperationResult[dict[str, float]]:
        """Relative change of each fitted decay rate when the box of the solution doubles."""

    @abstractmethod
    def solve_all(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[DefectSolution]:
        """Measure, correctors, skew potential and their decay reports."""
