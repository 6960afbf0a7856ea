"""Necessary imports for export."""

from .artifact_writer import ArtifactWriter
from .cell_provider import CellProvider
from .experiment_runner import ExperimentRunnerService, ExperimentRunnerServiceContract
from .experiment_tasks import (
    CellExperimentTask,
    ConvergeExperimentTask,
    DefectExperimentTask,
    DivFormExperimentTask,
    ExperimentTask,
    GenericExperimentTask,
    ProbeExperimentTask,
    ScalingExperimentTask,
    Validate1DExperimentTask,
)

__all__ = [
    "ArtifactWriter",
    "CellExperimentTask",
    "CellProvider",
    "ConvergeExperimentTask",
    "DefectExperimentTask",
    "DivFormExperimentTask",
    "ExperimentRunnerService",
    "ExperimentRunnerServiceContract",
    "ExperimentTask",
    "GenericExperimentTask",
    "ProbeExperimentTask",
    "ScalingExperimentTask",
    "Validate1DExperimentTask",
]
