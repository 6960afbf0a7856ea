"""Experiment task dispatcher.

Routes a run to the task registered for the configured kind.
"""

from defecthom.models import CoefficientSet, ExperimentOutcome, OperationResult, ResultCode
from defecthom.models.configuration import ExperimentConfig

from ..artifact_writer import ArtifactWriter
from .experiment_task import ExperimentTask


class GenericExperimentTask(ExperimentTask):
    """Kind-agnostic experiment task that delegates to the task of each kind."""

    def __init__(self, tasks: dict[str, ExperimentTask]):
        """Initialize with the kind-specific tasks.

        Args:
            tasks: Experiment task per experiment kind.
        """
        self.tasks = tasks

    def run(
        self, config: ExperimentConfig, coefficients: CoefficientSet, writer: ArtifactWriter
    ) -> OperationResult[ExperimentOutcome]:
        """Route the run to the task of the configured kind.

        Returns:
            OperationResult[ExperimentOutcome]: Result of the kind-specific task.
        """
        task = self.tasks.get(config.kind)
        if task is None:
            return OperationResult[ExperimentOutcome].fail(
                f'Not supported experiment kind "{config.kind}"', ResultCode.USAGE
            )
        return task.run(config, coefficients, writer)
