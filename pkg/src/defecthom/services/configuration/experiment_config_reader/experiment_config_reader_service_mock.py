"""Mock Experiment Config Reader Service - returns preset results and records calls."""

from defecthom.models import CoefficientSet, OperationResult
from defecthom.models.configuration import ConfigOverrides, ExperimentConfig

from .experiment_config_reader_service_contract import ExperimentConfigReaderServiceContract


class MockExperimentConfigReaderService(ExperimentConfigReaderServiceContract):
    """Every operation answers with its preset *_result attribute."""

    def __init__(self):
        self.read_params: list[tuple[str, ConfigOverrides | None]] = []
        self.read_result = OperationResult[ExperimentConfig].succeed(ExperimentConfig.default())
        self.validate_params: list[ExperimentConfig] = []
        self.validate_result = OperationResult[CoefficientSet].fail("no preset coefficients")

    def read(
        self, path_location: str, overrides: ConfigOverrides | None = None
    ) -> OperationResult[ExperimentConfig]:
        self.read_params.append((path_location, overrides))
        return self.read_result

    def validate(self, config: ExperimentConfig) -> OperationResult[CoefficientSet]:
        self.validate_params.append(config)
        return self.validate_result
