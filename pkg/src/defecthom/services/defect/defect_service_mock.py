"""Mock Defect Service - returns preset results and records calls."""

import math
from typing import Any, Optional

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

from .defect_service_contract import DefectServiceContract


class MockDefectService(DefectServiceContract):
    """Every operation answers with its preset *_result attribute."""

    def __init__(self):
        self.solve_all_params: list[Any] = []
        self.solve_all_result: OperationResult[DefectSolution] = OperationResult[
            DefectSolution
        ].fail("no defect solution preset")
        self.decay_exponents_result = DecayExponents(1.5, 1.5, 3.0)
        self.assemble_measure_rhs_result: OperationResult[Field] = OperationResult[Field].fail(
            "no measure rhs preset"
        )
        self.solve_invariant_defect_result: OperationResult[Field] = OperationResult[
            Field
        ].fail("no measure perturbation preset")
        self.solve_corrector_defect_result: OperationResult[Field] = OperationResult[
            Field
        ].fail("no corrector perturbation preset")
        self.solve_correctors_defect_result: OperationResult[tuple[Field, ...]] = (
            OperationResult[tuple[Field, ...]].fail("no corrector perturbations preset")
        )
        self.solve_B_defect_result: OperationResult[Field] = OperationResult[Field].fail(
            "no skew potential preset"
        )
        self.solve_B_defect_convolution_result: OperationResult[
            tuple[Field, Optional[float]]
        ] = OperationResult[tuple[Field, Optional[float]]].fail("no convolution preset")
        self.newtonian_skew_potential_result: OperationResult[Field] = OperationResult[
            Field
        ].fail("no Newtonian potential preset")
        self.estimate_constant_probe_params: list[Any] = []
        self.estimate_constant_probe_result: OperationResult[ProbeReport] = OperationResult[
            ProbeReport
        ].fail("no probe preset")
        self.decay_report_result: OperationResult[DecayReport] = OperationResult[
            DecayReport
        ].fail("no decay report preset")
        self.truncation_consistency_result = OperationResult[float].succeed(math.nan)
        self.decay_stability_params: list[Any] = []
        self.decay_stability_result: OperationResult[dict[str, float]] = OperationResult[
            dict[str, float]
        ].succeed({})

    def decay_exponents(self, coefficients: CoefficientSet) -> DecayExponents:
        return self.decay_exponents_result

    def assemble_measure_rhs(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[Field]:
        return self.assemble_measure_rhs_result

    def solve_invariant_defect(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[Field]:
        return self.solve_invariant_defect_result

    def solve_corrector_defect(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid, p: np.ndarray
    ) -> OperationResult[Field]:
        return self.solve_corrector_defect_result

    def solve_correctors_defect(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[tuple[Field, ...]]:
        return self.solve_correctors_defect_result

    def solve_B_defect(
        self, coefficients: CoefficientSet, cell: CellSolution, m_tilde: Field, grid: BoxGrid
    ) -> OperationResult[Field]:
        return self.solve_B_defect_result

    def solve_B_defect_convolution(
        self,
        coefficients: CoefficientSet,
        cell: CellSolution,
        m_tilde: Field,
        grid: BoxGrid,
        reference: Optional[Field] = None,
    ) -> OperationResult[tuple[Field, Optional[float]]]:
        return self.solve_B_defect_convolution_result

    def newtonian_skew_potential(self, flux: Field) -> OperationResult[Field]:
        return self.newtonian_skew_potential_result

    def estimate_constant_probe(
        self,
        coefficients: CoefficientSet,
        grid: BoxGrid,
        q: float,
        rhs: list[tuple[str, Evaluator]],
    ) -> OperationResult[ProbeReport]:
        self.estimate_constant_probe_params.append(
            {"coefficients": coefficients, "grid": grid, "q": q, "rhs": rhs}
        )
        return self.estimate_constant_probe_result

    def decay_report(self, solution: DefectSolution, which: str) -> OperationResult[DecayReport]:
        return self.decay_report_result

    def truncation_consistency(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[float]:
        return self.truncation_consistency_result

    def decay_stability(
        self, coefficients: CoefficientSet, cell: CellSolution, solution: DefectSolution
    ) -> OperationResult[dict[str, float]]:
        self.decay_stability_params.append(
            {"coefficients": coefficients, "cell": cell, "solution": solution}
        )
        return self.decay_stability_result

    def solve_all(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[DefectSolution]:
        self.solve_all_params.append({"coefficients": coefficients, "cell": cell, "grid": grid})
        return self.solve_all_result
