"""Imports for the interface definition."""

from abc import ABC, abstractmethod

from defecthom.models import CoefficientSet, OperationResult
from defecthom.models.configuration import ConfigOverrides, ExperimentConfig


class ExperimentConfigReaderServiceContract(ABC):
    """Loads experiment configurations and checks them against the solver assumptions."""

    @abstractmethod
    def read(
        self, path_location: str, overrides: ConfigOverrides | None = None
    ) -> OperationResult[ExperimentConfig]:
        """Parses the JSON document and applies the command line overrides."""

    @abstractmethod
    def validate(self, config: ExperimentConfig) -> OperationResult[CoefficientSet]:
        """Coefficients of a valid configuration; every violation fails with USAGE."""
