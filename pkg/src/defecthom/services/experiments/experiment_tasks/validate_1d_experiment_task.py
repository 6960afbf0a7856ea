"""Solver output against the one dimensional closed forms."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from defecthom.models import (
    BoxGrid,
    CellSolution,
    CoefficientSet,
    ExperimentOutcome,
    Field,
    OperationResult,
    Region,
    TorusGrid,
)
from defecthom.models.configuration import ExperimentConfig
from defecthom.models.oracle import OneDProfile, ScalarFunction
from defecthom.services.defect import DefectServiceContract
from defecthom.services.fields import FieldCalculusServiceContract
from defecthom.services.notifications import NotificationsServiceContract
from defecthom.services.oracle1d import OracleServiceContract

from ..artifact_writer import ArtifactWriter
from ..cell_provider import CellProvider
from .experiment_task import ExperimentTask

PERIODIC_TOLERANCE = 1e-8
A_STAR_TOLERANCE = 1e-6
BOX_TOLERANCE = 1e-6
REDUCTION_RANGE = (3.5, 4.5)


@dataclass
class Comparison:
    """Relative max error of one quantity; box quantities also carry the refined error."""

    quantity: str
    error: float
    tolerance: float
    refined_error: Optional[float] = None

    @property
    def reduction(self) -> Optional[float]:
        """Error ratio under halving of the spacing."""
        if self.refined_error is None or self.refined_error == 0.0:
            return None
        return self.error / self.refined_error

    @property
    def passed(self) -> bool:
        """Within tolerance, or converging at second order when refined."""
        if self.error <= self.tolerance:
            return True
        reduction = self.reduction
        low, high = REDUCTION_RANGE
        return reduction is not None and low <= reduction <= high

    def row(self) -> list:
        """CSV row."""
        reduction = self.reduction
        return [
            self.quantity,
            self.error,
            "" if self.refined_error is None else self.refined_error,
            "" if reduction is None else reduction,
            self.tolerance,
            int(self.passed),
        ]


def relative_error(computed: np.ndarray, exact: np.ndarray, mask: np.ndarray) -> float:
    """max |computed - exact| / max |exact| over the mask; absolute when exact vanishes."""
    scale = float(np.max(np.abs(exact[mask])))
    error = float(np.max(np.abs(computed - exact)[mask]))
    return error / scale if scale > 0.0 else error


class Validate1DExperimentTask(ExperimentTask):
    """
    Compares m_per, w'_per and A* on the torus, and w~' and m~ on the box, with their
    closed forms. Box quantities are also solved at half the spacing.

    A Dirichlet box adds a multiple of exp(B_per - B_tilde) to w~'; that homogeneous
    mode is projected out before comparing.
    """

    def __init__(
        self,
        cell_provider: CellProvider,
        defect: DefectServiceContract,
        field_calculus: FieldCalculusServiceContract,
        oracle: OracleServiceContract,
        notifications: NotificationsServiceContract,
    ):
        self.cell_provider = cell_provider
        self.defect = defect
        self.field_calculus = field_calculus
        self.oracle = oracle
        self.notifications = notifications

    def run(
        self, config: ExperimentConfig, coefficients: CoefficientSet, writer: ArtifactWriter
    ) -> OperationResult[ExperimentOutcome]:
        functions_result = self.oracle.coefficient_functions(coefficients)
        if not functions_result.success or functions_result.data is None:
            return functions_result.as_fail()
        b_per, b_tilde = functions_result.data

        torus = TorusGrid(1, config.grid.n_cell)
        cell_result = self.cell_provider.provide(coefficients, torus)
        if not cell_result.success or cell_result.data is None:
            return cell_result.as_fail()
        cell = cell_result.data

        profile_result = self.oracle.profile(b_per, b_tilde)
        if not profile_result.success or profile_result.data is None:
            return profile_result.as_fail()
        profile = profile_result.data

        comparisons_result = self._periodic_comparisons(cell, b_per, profile, writer)
        if not comparisons_result.success or comparisons_result.data is None:
            return comparisons_result.as_fail()
        comparisons = comparisons_result.data

        A_star_exact = 1.0 / (profile.normalization_plus * profile.normalization_minus)
        summary: dict = {"A_star_exact": A_star_exact}
        if b_tilde is not None:
            corrector_result = self.oracle.defect_corrector_1d(b_per, b_tilde)
            if not corrector_result.success or corrector_result.data is None:
                return corrector_result.as_fail()
            verdict = corrector_result.data
            summary["sublinear"] = verdict.sublinear
            summary["b_tilde_integral"] = verdict.total_integral
            if coefficients.counterexample:
                self.notifications.warning(
                    f"{coefficients.name}: the defect corrector is not sublinear, "
                    "box comparison skipped"
                )
            else:
                box_result = self._box_comparisons(
                    coefficients, cell, config, profile, verdict.derivative, b_per, b_tilde
                )
                if not box_result.success or box_result.data is None:
                    return box_result.as_fail()
                comparisons.extend(box_result.data)

        header = ["quantity", "error", "refined_error", "reduction", "tolerance", "passed"]
        table_result = writer.write_table(
            "validate_1d.csv", header, [comparison.row() for comparison in comparisons]
        )
        if not table_result.success:
            return table_result.as_fail()
        summary_result = writer.write_json("validate_1d_summary.json", summary)
        if not summary_result.success:
            return summary_result.as_fail()

        return OperationResult[ExperimentOutcome].succeed(
            ExperimentOutcome(
                files=list(writer.files),
                contracts={f"{c.quantity}_matches": c.passed for c in comparisons},
                residuals={c.quantity: c.error for c in comparisons},
                summary=summary,
            )
        )

    def _periodic_comparisons(
        self,
        cell: CellSolution,
        b_per: ScalarFunction,
        profile: OneDProfile,
        writer: ArtifactWriter,
    ) -> OperationResult[list[Comparison]]:
        grid = cell.grid
        measure_result = self.oracle.periodic_measure_1d(b_per)
        if not measure_result.success or measure_result.data is None:
            return measure_result.as_fail()
        derivative_result = self.oracle.periodic_corrector_1d(b_per)
        if not derivative_result.success or derivative_result.data is None:
            return derivative_result.as_fail()
        samples: list[Field] = []
        for function, label in (
            (measure_result.data, "m_per_exact"),
            (derivative_result.data, "w_per_prime_exact"),
        ):
            sample_result = self.oracle.sample(function, grid, label)
            if not sample_result.success or sample_result.data is None:
                return sample_result.as_fail()
            export_result = writer.write_field_csv(f"{label}.csv", sample_result.data)
            if not export_result.success:
                return export_result.as_fail()
            samples.append(sample_result.data)

        gradient_result = self.field_calculus.differentiate(cell.w_per[0], "grad")
        if not gradient_result.success or gradient_result.data is None:
            return gradient_result.as_fail()
        everywhere = np.ones(grid.shape, dtype=bool)
        A_star_exact = 1.0 / (profile.normalization_plus * profile.normalization_minus)
        return OperationResult[list[Comparison]].succeed(
            [
                Comparison(
                    "m_per",
                    relative_error(cell.m_per.values, samples[0].values, everywhere),
                    PERIODIC_TOLERANCE,
                ),
                Comparison(
                    "w_per_prime",
                    relative_error(gradient_result.data.values[0], samples[1].values, everywhere),
                    PERIODIC_TOLERANCE,
                ),
                Comparison(
                    "A_star",
                    abs(float(cell.A_star[0, 0]) - A_star_exact) / A_star_exact,
                    A_STAR_TOLERANCE,
                ),
            ]
        )

    def _box_comparisons(
        self,
        coefficients: CoefficientSet,
        cell: CellSolution,
        config: ExperimentConfig,
        profile: OneDProfile,
        corrector_derivative: ScalarFunction,
        b_per: ScalarFunction,
        b_tilde: ScalarFunction,
    ) -> OperationResult[list[Comparison]]:
        measure_result = self.oracle.defect_measure_1d(b_per, b_tilde)
        if not measure_result.success or measure_result.data is None:
            return measure_result.as_fail()

        errors: list[dict[str, float]] = []
        for n in (config.grid.n_box, 2 * config.grid.n_box):
            grid = BoxGrid(1, config.grid.L, n)
            solution_result = self.defect.solve_all(coefficients, cell, grid)
            if not solution_result.success or solution_result.data is None:
                return solution_result.as_fail()
            solution = solution_result.data
            gradient_result = self.field_calculus.differentiate(solution.w_tilde[0], "grad")
            if not gradient_result.success or gradient_result.data is None:
                return gradient_result.as_fail()

            x = grid.axis()
            inner = Region.ball(grid.L / 2.0).mask(grid)
            exact_derivative = corrector_derivative(x)
            mismatch = gradient_result.data.values[0] - exact_derivative
            mode = np.exp(profile.B_per(x) - profile.B_tilde(x))
            weight = float(np.dot(mode[inner], mismatch[inner]) / np.dot(mode[inner], mode[inner]))
            errors.append(
                {
                    "w_tilde_prime": float(np.max(np.abs(mismatch - weight * mode)[inner]))
                    / float(np.max(np.abs(exact_derivative[inner]))),
                    "m_tilde": relative_error(
                        solution.m_tilde.values, measure_result.data(x), inner
                    ),
                }
            )

        return OperationResult[list[Comparison]].succeed(
            [
                Comparison(quantity, errors[0][quantity], BOX_TOLERANCE, errors[1][quantity])
                for quantity in ("w_tilde_prime", "m_tilde")
            ]
        )
