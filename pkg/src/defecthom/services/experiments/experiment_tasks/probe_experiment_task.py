"""Empirical constant of the whole-space Calderon-Zygmund type estimate."""

import numpy as np

from defecthom.models import BoxGrid, CoefficientSet, Evaluator, ExperimentOutcome, OperationResult
from defecthom.models.configuration import ExperimentConfig
from defecthom.services.defect import DefectServiceContract

from ..artifact_writer import ArtifactWriter
from .experiment_task import ExperimentTask


def gaussian_source(width: float) -> Evaluator:
    """exp(-|x|^2 / 2 width^2) as a right-hand side."""

    def evaluate(points: np.ndarray) -> np.ndarray:
        return np.exp(-np.sum(points**2, axis=0) / (2.0 * width**2))

    return evaluate


class ProbeExperimentTask(ExperimentTask):
    """Norm ratios for Gaussian right-hand sides on the box and on the doubled box."""

    def __init__(self, defect: DefectServiceContract):
        self.defect = defect

    def run(
        self, config: ExperimentConfig, coefficients: CoefficientSet, writer: ArtifactWriter
    ) -> OperationResult[ExperimentOutcome]:
        grid = BoxGrid(coefficients.d, config.grid.L, config.grid.n_box)
        q = float(config.setting("q", max(coefficients.r, coefficients.s)))
        widths = [float(width) for width in config.setting("rhs_widths", [0.5, 1.0])]
        rhs = [(f"gaussian width={width:g}", gaussian_source(width)) for width in widths]

        report_result = self.defect.estimate_constant_probe(coefficients, grid, q, rhs)
        if not report_result.success or report_result.data is None:
            return report_result.as_fail()
        report = report_result.data

        rows = [
            [label, ratio, doubled]
            for label, ratio, doubled in zip(report.labels, report.ratios, report.ratios_doubled)
        ]
        writes = [
            writer.write_table("probe.csv", ["rhs", "ratio", "ratio_doubled"], rows),
            writer.write_json("probe_summary.json", report.as_object()),
        ]
        for write_result in writes:
            if not write_result.success:
                return write_result.as_fail()
        return OperationResult[ExperimentOutcome].succeed(
            ExperimentOutcome(
                files=list(writer.files),
                contracts={"estimate_constant_stable": report.stable},
                residuals={"constant_growth": report.growth},
                summary=report.as_object(),
            )
        )
