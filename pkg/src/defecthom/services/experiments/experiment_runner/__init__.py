"""Necessary imports for export."""

from .experiment_runner_service import (
    ExperimentRunnerService,
    config_hash,
    package_versions,
)
from .experiment_runner_service_contract import ExperimentRunnerServiceContract

__all__ = [
    "ExperimentRunnerService",
    "ExperimentRunnerServiceContract",
    "config_hash",
    "package_versions",
]
