"""Base interface for experiment tasks.

Defines the abstract contract for every experiment kind.
"""

from abc import ABC, abstractmethod

from defecthom.models import CoefficientSet, ExperimentOutcome, OperationResult
from defecthom.models.configuration import ExperimentConfig

from ..artifact_writer import ArtifactWriter


class ExperimentTask(ABC):
    """Abstract base class for experiment tasks.

    A task solves what its kind needs, writes its outputs through the writer and
    reports contract verdicts and key residuals.
    """

    @abstractmethod
    def run(
        self, config: ExperimentConfig, coefficients: CoefficientSet, writer: ArtifactWriter
    ) -> OperationResult[ExperimentOutcome]:
        """Run the experiment.

        Args:
            config: Validated experiment configuration.
            coefficients: Coefficient set built from the configuration.
            writer: Destination of the produced files.

        Returns:
            OperationResult[ExperimentOutcome]: Contracts, residuals and summary on success.
        """
