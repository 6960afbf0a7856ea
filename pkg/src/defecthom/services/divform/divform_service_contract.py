"""Imports for the interface definition."""

from abc import ABC, abstractmethod

import numpy as np

from defecthom.models import (
    BoxGrid,
    CellSolution,
    CoefficientSet,
    CrossValidationReport,
    DefectSolution,
    DivFormProblem,
    Field,
    OperationResult,
)


class DivFormServiceContract(ABC):
    """The divergence form -div(A grad u) = m (-a : D2 u + b . grad u) with A = m a - B."""

    @abstractmethod
    def assemble_A(
        self,
        coefficients: CoefficientSet,
        cell: CellSolution,
        defect: DefectSolution,
        grid: BoxGrid,
    ) -> OperationResult[DivFormProblem]:
        """A = (m_per + m~)(a_per + a~) - (B_per + B~) nodewise with its diagnostics."""

    @abstractmethod
    def identity_residual(
        self, problem: DivFormProblem, coefficients: CoefficientSet, u: Field
    ) -> OperationResult[float]:
        """|-div(A grad u) - m (-a : D2 u + b . grad u)|_L2 / |u|_H2 on the interior nodes."""

    @abstractmethod
    def solve_corrector_divform(
        self,
        problem: DivFormProblem,
        coefficients: CoefficientSet,
        cell: CellSolution,
        p: np.ndarray,
    ) -> OperationResult[Field]:
        """w~_p from -div(A grad w~_p) = m times the non-divergence corrector rhs."""

    @abstractmethod
    def solve_correctors_divform(
        self, problem: DivFormProblem, coefficients: CoefficientSet, cell: CellSolution
    ) -> OperationResult[tuple[Field, ...]]:
        """w~_p for p = e_1, ..., e_d in index order."""

    @abstractmethod
    def cross_validate(
        self, w_nondiv: Field, w_div: Field, grid: BoxGrid, q_star: float = 2.0
    ) -> OperationResult[CrossValidationReport]:
        """Relative gradient discrepancy of two corrector routes on |x| <= L/2."""
