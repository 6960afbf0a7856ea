"""Necessary imports for export."""

from .cell_experiment_task import CellExperimentTask
from .converge_experiment_task import ConvergeExperimentTask
from .defect_experiment_task import DefectExperimentTask
from .divform_experiment_task import DivFormExperimentTask
from .experiment_task import ExperimentTask
from .generic_experiment_task import GenericExperimentTask
from .probe_experiment_task import ProbeExperimentTask
from .scaling_experiment_task import ScalingExperimentTask
from .validate_1d_experiment_task import Validate1DExperimentTask

__all__ = [
    "CellExperimentTask",
    "ConvergeExperimentTask",
    "DefectExperimentTask",
    "DivFormExperimentTask",
    "ExperimentTask",
    "GenericExperimentTask",
    "ProbeExperimentTask",
    "ScalingExperimentTask",
    "Validate1DExperimentTask",
]
