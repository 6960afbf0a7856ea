"""Periodic cell problems: m_per, the correctors, B_per and A*."""

import numpy as np

from defecthom.models import (
    CoefficientSet,
    ExperimentOutcome,
    OperationResult,
    TorusGrid,
)
from defecthom.models.configuration import ExperimentConfig

from ..artifact_writer import ArtifactWriter
from ..cell_provider import CellProvider
from .experiment_task import ExperimentTask

DRIFT_TOLERANCE = 1e-8
A_STAR_TOLERANCE = 1e-6


class CellExperimentTask(ExperimentTask):
    """Solves the cell problems and writes their fields, A* and a summary."""

    def __init__(self, cell_provider: CellProvider):
        self.cell_provider = cell_provider

    def run(
        self, config: ExperimentConfig, coefficients: CoefficientSet, writer: ArtifactWriter
    ) -> OperationResult[ExperimentOutcome]:
        grid = TorusGrid(coefficients.d, config.grid.n_cell)
        cell_result = self.cell_provider.provide(coefficients, grid)
        if not cell_result.success or cell_result.data is None:
            return cell_result.as_fail()
        cell = cell_result.data

        fields = {"m_per.dhf": cell.m_per, "B_per.dhf": cell.B_per, "A_per.dhf": cell.A_per}
        for index, corrector in enumerate(cell.w_per):
            fields[f"w_per_{index}.dhf"] = corrector
        d = grid.d
        rows = [[i, j, cell.A_star[i, j]] for i in range(d) for j in range(d)]
        writes = [
            writer.write_json("cell_summary.json", cell.summary()),
            writer.write_table("A_star.csv", ["i", "j", "value"], rows),
            writer.write_fields(fields),
        ]
        if d == 1:
            writes.append(writer.write_field_csv("m_per.csv", cell.m_per))
        for write_result in writes:
            if not write_result.success:
                return write_result.as_fail()

        contracts = {
            "m_per_positive": float(np.min(cell.m_per.values)) > 0.0,
            "zero_drift": float(np.max(np.abs(cell.drift))) <= DRIFT_TOLERANCE,
            "A_star_consistent": cell.A_star_discrepancy <= A_STAR_TOLERANCE,
            "A_star_elliptic": cell.ellipticity_margin > 0.0,
        }
        residuals = dict(cell.residuals)
        residuals["A_star_discrepancy"] = cell.A_star_discrepancy
        return OperationResult[ExperimentOutcome].succeed(
            ExperimentOutcome(
                files=list(writer.files),
                contracts=contracts,
                residuals=residuals,
                summary={"A_star": cell.A_star.tolist()},
            )
        )
