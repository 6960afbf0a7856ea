"""Necessary imports for export."""

from .experiment_config_reader_service import ExperimentConfigReaderService
from .experiment_config_reader_service_contract import ExperimentConfigReaderServiceContract

__all__ = ["ExperimentConfigReaderService", "ExperimentConfigReaderServiceContract"]
