"""Divergence form of the operator and the second corrector route."""

import dataclasses

import numpy as np

from defecthom.models import (
    BoxGrid,
    CoefficientSet,
    ExperimentOutcome,
    Field,
    OperationResult,
    TorusGrid,
)
from defecthom.models.configuration import ExperimentConfig
from defecthom.services.defect import DefectServiceContract
from defecthom.services.divform import DivFormServiceContract

from ..artifact_writer import ArtifactWriter
from ..cell_provider import CellProvider
from .experiment_task import ExperimentTask


class DivFormExperimentTask(ExperimentTask):
    """
    Assembles A = m a - B, tests the identity -div(A grad u) = m L u on a Gaussian and
    compares the divergence form correctors with the non-divergence ones.
    """

    def __init__(
        self,
        cell_provider: CellProvider,
        defect: DefectServiceContract,
        divform: DivFormServiceContract,
    ):
        self.cell_provider = cell_provider
        self.defect = defect
        self.divform = divform

    def run(
        self, config: ExperimentConfig, coefficients: CoefficientSet, writer: ArtifactWriter
    ) -> OperationResult[ExperimentOutcome]:
        d = coefficients.d
        cell_result = self.cell_provider.provide(coefficients, TorusGrid(d, config.grid.n_cell))
        if not cell_result.success or cell_result.data is None:
            return cell_result.as_fail()
        cell = cell_result.data
        grid = BoxGrid(d, config.grid.L, config.grid.n_box)

        defect_result = self.defect.solve_all(coefficients, cell, grid)
        if not defect_result.success or defect_result.data is None:
            return defect_result.as_fail()
        defect = defect_result.data

        problem_result = self.divform.assemble_A(coefficients, cell, defect, grid)
        if not problem_result.success or problem_result.data is None:
            return problem_result.as_fail()
        problem = problem_result.data

        width = float(config.setting("identity_test_width", 1.0))
        test_function = Field.scalar(
            grid, np.exp(-(grid.radius() ** 2) / (2.0 * width**2)), "identity test function"
        )
        identity_result = self.divform.identity_residual(problem, coefficients, test_function)
        if not identity_result.success or identity_result.data is None:
            return identity_result.as_fail()
        problem = dataclasses.replace(problem, residual_identity=identity_result.data)

        correctors_result = self.divform.solve_correctors_divform(problem, coefficients, cell)
        if not correctors_result.success or correctors_result.data is None:
            return correctors_result.as_fail()

        rows: list[list[float]] = []
        agree = True
        for index, (w_nondiv, w_div) in enumerate(zip(defect.w_tilde, correctors_result.data)):
            report_result = self.divform.cross_validate(w_nondiv, w_div, grid, defect.q_star)
            if not report_result.success or report_result.data is None:
                return report_result.as_fail()
            report = report_result.data
            agree = agree and report.within_tolerance
            rows.append(
                [index, report.relative_l2, report.relative_q_star, report.q_star, report.tolerance]
            )

        fields = {"A.dhf": problem.A, "A_tilde.dhf": problem.A_tilde, "m.dhf": problem.m}
        for index, corrector in enumerate(correctors_result.data):
            fields[f"w_tilde_div_{index}.dhf"] = corrector
        writes = [
            writer.write_fields(fields),
            writer.write_table(
                "cross_validation.csv",
                ["direction", "relative_l2", "relative_q_star", "q_star", "tolerance"],
                rows,
            ),
            writer.write_json("divform_summary.json", problem.summary()),
        ]
        for write_result in writes:
            if not write_result.success:
                return write_result.as_fail()

        residuals = {
            "divergence_residual": problem.divergence_residual,
            "identity_residual": identity_result.data,
        }
        residuals.update({f"cross_validation_{int(row[0])}": row[1] for row in rows})
        return OperationResult[ExperimentOutcome].succeed(
            ExperimentOutcome(
                files=list(writer.files),
                contracts={
                    "A_elliptic": problem.ellipticity_margin > 0.0,
                    "corrector_routes_agree": agree,
                },
                residuals=residuals,
                summary=problem.summary(),
            )
        )
