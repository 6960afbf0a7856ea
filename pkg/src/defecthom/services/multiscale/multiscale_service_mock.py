"""Mock Multiscale Service - returns preset results and records calls."""

from typing import Any, Optional

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

from .multiscale_service_contract import MultiscaleServiceContract


class MockMultiscaleService(MultiscaleServiceContract):
    """Every operation answers with its preset *_result attribute."""

    def __init__(self):
        self.solve_eps_result: OperationResult[Field] = OperationResult[Field].fail(
            "no oscillatory solution preset"
        )
        self.solve_homogenized_result: OperationResult[Field] = OperationResult[Field].fail(
            "no homogenized solution preset"
        )
        self.two_scale_error_result: OperationResult[TwoScaleError] = OperationResult[
            TwoScaleError
        ].fail("no two-scale error preset")
        self.rate_fit_result: OperationResult[RateFit] = OperationResult[RateFit].fail(
            "no rate preset"
        )
        self.hessian_scaling_params: list[Any] = []
        self.hessian_scaling_result: OperationResult[RateFit] = OperationResult[RateFit].fail(
            "no scaling preset"
        )
        self.convergence_study_params: list[Any] = []
        self.convergence_study_result: OperationResult[ConvergenceReport] = OperationResult[
            ConvergenceReport
        ].fail("no convergence study preset")

    def solve_eps(
        self, problem: EpsProblem, coefficients: CoefficientSet, eps: float
    ) -> OperationResult[Field]:
        return self.solve_eps_result

    def solve_homogenized(self, problem: EpsProblem, A_star: np.ndarray) -> OperationResult[Field]:
        return self.solve_homogenized_result

    def two_scale_error(
        self,
        problem: EpsProblem,
        cell: CellSolution,
        u_eps: Field,
        u_star: Field,
        eps: float,
        defect: Optional[DefectSolution] = None,
    ) -> OperationResult[TwoScaleError]:
        return self.two_scale_error_result

    def rate_fit(self, scales: list[float], values: list[float]) -> OperationResult[RateFit]:
        return self.rate_fit_result

    def hessian_scaling(
        self, problem: EpsProblem, coefficients: CoefficientSet, beta: float = 2.0
    ) -> OperationResult[RateFit]:
        self.hessian_scaling_params.append(
            {"problem": problem, "coefficients": coefficients, "beta": beta}
        )
        return self.hessian_scaling_result

    def convergence_study(
        self,
        problem: EpsProblem,
        coefficients: CoefficientSet,
        cell: CellSolution,
        defect: Optional[DefectSolution] = None,
    ) -> OperationResult[ConvergenceReport]:
        self.convergence_study_params.append(
            {"problem": problem, "coefficients": coefficients, "defect": defect}
        )
        return self.convergence_study_result
