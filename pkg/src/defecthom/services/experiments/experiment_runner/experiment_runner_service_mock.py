"""Mock Experiment Runner Service - returns preset results and records calls."""

from defecthom.models import ArtifactManifest, CoefficientSet, OperationResult
from defecthom.models.configuration import ExperimentConfig

from .experiment_runner_service_contract import ExperimentRunnerServiceContract


class MockExperimentRunnerService(ExperimentRunnerServiceContract):
    """Every operation answers with its preset *_result attribute."""

    def __init__(self):
        self.run_params: list[tuple[ExperimentConfig, CoefficientSet]] = []
        self.run_result = OperationResult[ArtifactManifest].succeed(
            ArtifactManifest(kind="cell", family="constant", config_hash="0" * 64, versions={})
        )

    def run(
        self, config: ExperimentConfig, coefficients: CoefficientSet
    ) -> OperationResult[ArtifactManifest]:
        self.run_params.append((config, coefficients))
        return self.run_result
