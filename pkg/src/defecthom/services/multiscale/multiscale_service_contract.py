"""Imports for the interface definition."""

from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from defecthom.models import (
    CellSolution,
    CoefficientSet,
    ConvergenceReport,
    DefectSolution,
    EpsProblem,
    Field,
    OperationResult,
    RateFit,
    TwoScaleError,
)


class MultiscaleServiceContract(ABC):
    """Oscillatory Dirichlet problems, their homogenized limit and the two-scale expansion."""

    @abstractmethod
    def solve_eps(
        self, problem: EpsProblem, coefficients: CoefficientSet, eps: float
    ) -> OperationResult[Field]:
        """u_eps from -a(x/eps) : D2 u + b(x/eps) . grad u / eps = f with zero boundary data."""

    @abstractmethod
    def solve_homogenized(
        self, problem: EpsProblem, A_star: np.ndarray
    ) -> OperationResult[Field]:
        """u* from -sym(A*) : D2 u = f with zero boundary data."""

    @abstractmethod
    def two_scale_error(
        self,
        problem: EpsProblem,
        cell: CellSolution,
        u_eps: Field,
        u_star: Field,
        eps: float,
        defect: Optional[DefectSolution] = None,
    ) -> OperationResult[TwoScaleError]:
        """|u_eps - u*|_L2 and the interior H1 and W1,inf errors of u* + eps d_j u* w_j(x/eps)."""

    @abstractmethod
    def rate_fit(self, scales: list[float], values: list[float]) -> OperationResult[RateFit]:
        """Least squares slope of log values against log scales with a 95% band."""

    @abstractmethod
    def hessian_scaling(
        self, problem: EpsProblem, coefficients: CoefficientSet, beta: float = 2.0
    ) -> OperationResult[RateFit]:
        """Fitted exponent of |D2 u_eps|_L^beta against eps."""

    @abstractmethod
    def convergence_study(
        self,
        problem: EpsProblem,
        coefficients: CoefficientSet,
        cell: CellSolution,
        defect: Optional[DefectSolution] = None,
    ) -> OperationResult[ConvergenceReport]:
        """Errors per scale, with the periodic-only ablation when a defect solution is given."""
