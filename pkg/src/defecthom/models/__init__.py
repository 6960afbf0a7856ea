"""Necessary imports for export."""

from .coefficients import CoefficientSet, Evaluator, ValidationReport
from .divform import CrossValidationReport, DivFormProblem
from .field import Field
from .grids import BoxGrid, DomainGrid, Grid, NodeGrid, TorusGrid, grid_from_object
from .manifest import ArtifactManifest, ExperimentOutcome, ManifestEntry
from .multiscale import ConvergenceReport, EpsProblem, RateFit, ScaleRow, TwoScaleError
from .operation_result import OperationResult, ResultCode
from .oracle import DefectCorrectorOracle, GradientDefectMeasure, OneDProfile
from .probe import ProbeReport
from .region import Region
from .solve_report import LinearSolution, SolveReport
from .solutions import (
    CellSolution,
    DecayExponents,
    DecayReport,
    DefectSolution,
    ShellProfile,
)

__all__ = [
    "ArtifactManifest",
    "BoxGrid",
    "CellSolution",
    "CoefficientSet",
    "ConvergenceReport",
    "CrossValidationReport",
    "DecayExponents",
    "DecayReport",
    "DefectCorrectorOracle",
    "DefectSolution",
    "DivFormProblem",
    "DomainGrid",
    "EpsProblem",
    "Evaluator",
    "ExperimentOutcome",
    "Field",
    "GradientDefectMeasure",
    "Grid",
    "LinearSolution",
    "grid_from_object",
    "ManifestEntry",
    "NodeGrid",
    "OneDProfile",
    "OperationResult",
    "ProbeReport",
    "RateFit",
    "Region",
    "ResultCode",
    "ScaleRow",
    "ShellProfile",
    "SolveReport",
    "TorusGrid",
    "TwoScaleError",
    "ValidationReport",
]
