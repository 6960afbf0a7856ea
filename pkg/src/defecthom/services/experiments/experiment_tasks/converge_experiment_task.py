"""Homogenization error sweep over the scales, with the periodic-only ablation."""

from typing import Optional

from defecthom.models import (
    BoxGrid,
    CoefficientSet,
    DefectSolution,
    ExperimentOutcome,
    OperationResult,
    TorusGrid,
)
from defecthom.models.configuration import ExperimentConfig
from defecthom.models.multiscale import COLUMNS
from defecthom.services.configuration import build_eps_problem
from defecthom.services.defect import DefectServiceContract
from defecthom.services.multiscale import MultiscaleServiceContract

from ..artifact_writer import ArtifactWriter
from ..cell_provider import CellProvider
from .experiment_task import ExperimentTask

FIRST_ORDER_RATE = (0.8, 1.2)
NEGLIGIBLE_ERROR = 1e-10
STALLED_SLOPE = 0.25


class ConvergeExperimentTask(ExperimentTask):
    """Errors of u* and of the two-scale expansion for every scale of the sweep."""

    def __init__(
        self,
        cell_provider: CellProvider,
        defect: DefectServiceContract,
        multiscale: MultiscaleServiceContract,
    ):
        self.cell_provider = cell_provider
        self.defect = defect
        self.multiscale = multiscale

    def run(
        self, config: ExperimentConfig, coefficients: CoefficientSet, writer: ArtifactWriter
    ) -> OperationResult[ExperimentOutcome]:
        d = coefficients.d
        cell_result = self.cell_provider.provide(coefficients, TorusGrid(d, config.grid.n_cell))
        if not cell_result.success or cell_result.data is None:
            return cell_result.as_fail()
        cell = cell_result.data

        defect: Optional[DefectSolution] = None
        if coefficients.has_defect:
            grid = BoxGrid(d, config.grid.L, config.grid.n_box)
            defect_result = self.defect.solve_all(coefficients, cell, grid)
            if not defect_result.success or defect_result.data is None:
                return defect_result.as_fail()
            defect = defect_result.data

        problem = build_eps_problem(config, d)
        study_result = self.multiscale.convergence_study(problem, coefficients, cell, defect)
        if not study_result.success or study_result.data is None:
            return study_result.as_fail()
        report = study_result.data

        columns = COLUMNS if defect is not None else COLUMNS[:5]
        table = report.table(columns)
        writes = [
            writer.write_table("convergence.csv", table[0], table[1:]),
            writer.write_json("convergence_summary.json", report.summary()),
        ]
        for write_result in writes:
            if not write_result.success:
                return write_result.as_fail()

        contracts = {
            "l2_error_converges": not any("increasing steps" in flag for flag in report.flags)
        }
        l2_fit = report.slopes.get("l2_error")
        if (
            defect is None
            and l2_fit is not None
            and max(report.column("l2_error")) > NEGLIGIBLE_ERROR
        ):
            low, high = FIRST_ORDER_RATE
            contracts["l2_rate_first_order"] = low <= l2_fit.slope <= high
        if defect is not None:
            contracts["w1inf_decreases_with_defect_corrector"] = not any(
                flag.startswith("w1inf_error") for flag in report.flags
            )
            periodic_fit = report.slopes.get("w1inf_error_periodic_only")
            contracts["periodic_only_stalls"] = (
                periodic_fit is None or periodic_fit.slope < STALLED_SLOPE
            )

        residuals = {f"{name}_slope": fit.slope for name, fit in report.slopes.items()}
        return OperationResult[ExperimentOutcome].succeed(
            ExperimentOutcome(
                files=list(writer.files),
                contracts=contracts,
                residuals=residuals,
                summary=report.summary(),
            )
        )
