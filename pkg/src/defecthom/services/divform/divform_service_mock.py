"""Mock Div Form Service - returns preset results and records calls."""

from typing import Any

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

from .divform_service_contract import DivFormServiceContract


class MockDivFormService(DivFormServiceContract):
    """Every operation answers with its preset *_result attribute."""

    def __init__(self):
        self.assemble_A_params: list[Any] = []
        self.assemble_A_result: OperationResult[DivFormProblem] = OperationResult[
            DivFormProblem
        ].fail("no assembly preset")
        self.identity_residual_result = OperationResult[float].succeed(0.0)
        self.solve_corrector_divform_result: OperationResult[Field] = OperationResult[
            Field
        ].fail("no corrector preset")
        self.solve_correctors_divform_result: OperationResult[tuple[Field, ...]] = (
            OperationResult[tuple[Field, ...]].fail("no correctors preset")
        )
        self.cross_validate_result: OperationResult[CrossValidationReport] = OperationResult[
            CrossValidationReport
        ].fail("no cross validation preset")

    def assemble_A(
        self,
        coefficients: CoefficientSet,
        cell: CellSolution,
        defect: DefectSolution,
        grid: BoxGrid,
    ) -> OperationResult[DivFormProblem]:
        self.assemble_A_params.append({"coefficients": coefficients, "grid": grid})
        return self.assemble_A_result

    def identity_residual(
        self, problem: DivFormProblem, coefficients: CoefficientSet, u: Field
    ) -> OperationResult[float]:
        return self.identity_residual_result

    def solve_corrector_divform(
        self,
        problem: DivFormProblem,
        coefficients: CoefficientSet,
        cell: CellSolution,
        p: np.ndarray,
    ) -> OperationResult[Field]:
        return self.solve_corrector_divform_result

    def solve_correctors_divform(
        self, problem: DivFormProblem, coefficients: CoefficientSet, cell: CellSolution
    ) -> OperationResult[tuple[Field, ...]]:
        return self.solve_correctors_divform_result

    def cross_validate(
        self, w_nondiv: Field, w_div: Field, grid: BoxGrid, q_star: float = 2.0
    ) -> OperationResult[CrossValidationReport]:
        return self.cross_validate_result
