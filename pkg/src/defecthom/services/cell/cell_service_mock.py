"""Mock Cell Service - returns preset results and records calls."""

from typing import Any, Optional

import numpy as np

from defecthom.models import CellSolution, CoefficientSet, Field, OperationResult, TorusGrid

from .cell_service_contract import CellServiceContract


class MockCellService(CellServiceContract):
    """Every operation answers with its preset *_result attribute."""

    def __init__(self):
        self.solve_all_params: list[Any] = []
        self.solve_all_result: OperationResult[CellSolution] = OperationResult[
            CellSolution
        ].fail("no cell solution preset")
        self.solve_invariant_measure_result: OperationResult[Field] = OperationResult[
            Field
        ].fail("no measure preset")
        self.drift_result = OperationResult[np.ndarray].succeed(np.zeros(1))
        self.solve_corrector_periodic_result: OperationResult[Field] = OperationResult[
            Field
        ].fail("no corrector preset")
        self.solve_B_periodic_result: OperationResult[Field] = OperationResult[Field].fail(
            "no skew potential preset"
        )
        self.homogenized_tensor_result = OperationResult[tuple[np.ndarray, float]].succeed(
            (np.eye(1), 0.0)
        )

    def solve_invariant_measure(
        self, coefficients: CoefficientSet, grid: TorusGrid
    ) -> OperationResult[Field]:
        return self.solve_invariant_measure_result

    def drift(self, m_per: Field, coefficients: CoefficientSet) -> OperationResult[np.ndarray]:
        return self.drift_result

    def solve_corrector_periodic(
        self,
        coefficients: CoefficientSet,
        grid: TorusGrid,
        p: np.ndarray,
        m_per: Optional[Field] = None,
    ) -> OperationResult[Field]:
        return self.solve_corrector_periodic_result

    def solve_B_periodic(
        self, coefficients: CoefficientSet, grid: TorusGrid, m_per: Field
    ) -> OperationResult[Field]:
        return self.solve_B_periodic_result

    def homogenized_tensor(
        self, cell: CellSolution, coefficients: CoefficientSet
    ) -> OperationResult[tuple[np.ndarray, float]]:
        return self.homogenized_tensor_result

    def solve_all(
        self, coefficients: CoefficientSet, grid: TorusGrid
    ) -> OperationResult[CellSolution]:
        self.solve_all_params.append({"coefficients": coefficients, "grid": grid})
        return self.solve_all_result
