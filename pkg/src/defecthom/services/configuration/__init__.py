"""Necessary imports for export."""

from .experiment_config_reader import (
    ExperimentConfigReaderService,
    ExperimentConfigReaderServiceContract,
)
from .problems import build_eps_problem, check_eps_problem, domain_grid, right_hand_side

__all__ = [
    "ExperimentConfigReaderService",
    "ExperimentConfigReaderServiceContract",
    "build_eps_problem",
    "check_eps_problem",
    "domain_grid",
    "right_hand_side",
]
