"""Mock experiment task - returns a preset result and records calls."""

from dataclasses import dataclass

from defecthom.models import CoefficientSet, ExperimentOutcome, OperationResult
from defecthom.models.configuration import ExperimentConfig

from ..artifact_writer import ArtifactWriter
from .experiment_task import ExperimentTask


@dataclass
class RunParams:
    """Params of the run method."""

    config: ExperimentConfig
    coefficients: CoefficientSet
    writer: ArtifactWriter


class MockExperimentTask(ExperimentTask):
    """Answers with run_result; writes the files named in files_to_write first."""

    def __init__(self):
        self.run_params: list[RunParams] = []
        self.run_result = OperationResult[ExperimentOutcome].succeed(ExperimentOutcome())
        self.files_to_write: list[str] = []

    def run(
        self, config: ExperimentConfig, coefficients: CoefficientSet, writer: ArtifactWriter
    ) -> OperationResult[ExperimentOutcome]:
        self.run_params.append(RunParams(config, coefficients, writer))
        for name in self.files_to_write:
            writer.write_json(name, {"name": name})
        return self.run_result
