"""Defect-induced perturbations on the box and their decay."""

import numpy as np

from defecthom.models import (
    BoxGrid,
    CoefficientSet,
    DefectSolution,
    ExperimentOutcome,
    OperationResult,
    Region,
    ResultCode,
    TorusGrid,
)
from defecthom.models.configuration import ExperimentConfig
from defecthom.services.defect import DefectServiceContract
from defecthom.services.discretization import BoxBackground
from defecthom.services.oracle1d import OracleServiceContract

from ..artifact_writer import ArtifactWriter
from ..cell_provider import CellProvider
from .experiment_task import ExperimentTask

GRADIENT_DEFECT_FAMILY = "gradient-defect"
GRADIENT_DEFECT_TOLERANCE = 1e-3
DECAY_STABILITY_TOLERANCE = 0.2


def write_defect_solution(
    writer: ArtifactWriter, solution: DefectSolution
) -> OperationResult[bool]:
    """Fields, decay tables and the summary of a defect solution."""
    fields = {"m_tilde.dhf": solution.m_tilde, "B_tilde.dhf": solution.B_tilde}
    for index, corrector in enumerate(solution.w_tilde):
        fields[f"w_tilde_{index}.dhf"] = corrector
    fields_result = writer.write_fields(fields)
    if not fields_result.success:
        return fields_result
    for which, report in solution.decay.items():
        table_result = writer.write_table(
            f"decay_{which}.csv", ["radius", "norm", "sublinearity"], report.rows()
        )
        if not table_result.success:
            return table_result
    return writer.write_json("defect_summary.json", solution.summary())


class DefectExperimentTask(ExperimentTask):
    """Solves for m~, w~ and B~, checks positivity, decay and the truncation."""

    def __init__(
        self,
        cell_provider: CellProvider,
        defect: DefectServiceContract,
        oracle: OracleServiceContract,
    ):
        self.cell_provider = cell_provider
        self.defect = defect
        self.oracle = oracle

    def run(
        self, config: ExperimentConfig, coefficients: CoefficientSet, writer: ArtifactWriter
    ) -> OperationResult[ExperimentOutcome]:
        d = coefficients.d
        cell_result = self.cell_provider.provide(coefficients, TorusGrid(d, config.grid.n_cell))
        if not cell_result.success or cell_result.data is None:
            return cell_result.as_fail()
        cell = cell_result.data
        grid = BoxGrid(d, config.grid.L, config.grid.n_box)

        solution_result = self.defect.solve_all(coefficients, cell, grid)
        if not solution_result.success or solution_result.data is None:
            return solution_result.as_fail()
        solution = solution_result.data
        write_result = write_defect_solution(writer, solution)
        if not write_result.success:
            return write_result.as_fail()

        residuals = dict(solution.residuals)
        contracts: dict[str, bool] = {}
        background = BoxBackground(coefficients, cell, grid)
        contracts["m_positive"] = float(np.min(background.m_per + solution.m_tilde.values)) > 0.0
        if coefficients.has_defect:
            for which, report in solution.decay.items():
                contracts[f"{which}_decays"] = (
                    report.fitted_rate is not None and report.fitted_rate < 0.0
                )
                if report.sublinearity_decreasing is not None:
                    contracts["w_tilde_sublinear"] = report.sublinearity_decreasing

            truncation_result = self.defect.truncation_consistency(coefficients, cell, grid)
            if not truncation_result.success or truncation_result.data is None:
                return truncation_result.as_fail()
            residuals["truncation_change"] = truncation_result.data

            if config.setting("decay_stability", True):
                stability_result = self.defect.decay_stability(coefficients, cell, solution)
                if not stability_result.success or stability_result.data is None:
                    return stability_result.as_fail()
                for which, change in stability_result.data.items():
                    residuals[f"{which}_decay_change"] = change
                    contracts[f"{which}_decay_stable"] = change <= DECAY_STABILITY_TOLERANCE

        if coefficients.name == GRADIENT_DEFECT_FAMILY and coefficients.potential is not None:
            oracle_result = self._gradient_defect_error(coefficients, solution)
            if not oracle_result.success or oracle_result.data is None:
                return oracle_result.as_fail()
            residuals["m_tilde_closed_form"] = oracle_result.data
            contracts["m_tilde_closed_form"] = oracle_result.data <= GRADIENT_DEFECT_TOLERANCE

        if config.setting("convolution", False) and d == 3 and coefficients.has_defect:
            routes_result = self.defect.solve_B_defect_convolution(
                coefficients, cell, solution.m_tilde, grid, solution.B_tilde
            )
            if routes_result.success and routes_result.data is not None:
                potential, discrepancy = routes_result.data
                residuals["B_tilde_routes"] = discrepancy if discrepancy is not None else 0.0
                contracts["B_tilde_routes_agree"] = True
                field_result = writer.write_field("B_tilde_convolution.dhf", potential)
                if not field_result.success:
                    return field_result.as_fail()
            elif routes_result.code == ResultCode.CONTRACT_VIOLATION:
                contracts["B_tilde_routes_agree"] = False
            else:
                return routes_result.as_fail()

        return OperationResult[ExperimentOutcome].succeed(
            ExperimentOutcome(
                files=list(writer.files),
                contracts=contracts,
                residuals=residuals,
                summary=solution.summary(),
            )
        )

    def _gradient_defect_error(
        self, coefficients: CoefficientSet, solution: DefectSolution
    ) -> OperationResult[float]:
        """Relative max error of m~ against exp(-psi) - 1 on |x| <= L/2."""
        grid = solution.grid
        measure_result = self.oracle.gradient_defect_measure(coefficients.potential, grid.d)
        if not measure_result.success or measure_result.data is None:
            return measure_result.as_fail()
        exact = measure_result.data.m_tilde(grid.coordinates())
        inner = Region.ball(grid.L / 2.0).mask(grid)
        scale = float(np.max(np.abs(exact[inner])))
        error = float(np.max(np.abs(solution.m_tilde.values - exact)[inner]))
        return OperationResult[float].succeed(error / scale if scale > 0.0 else error)
