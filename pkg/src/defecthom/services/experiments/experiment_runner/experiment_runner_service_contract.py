"""Imports for the interface definition."""

from abc import ABC, abstractmethod

from defecthom.models import ArtifactManifest, CoefficientSet, OperationResult
from defecthom.models.configuration import ExperimentConfig


class ExperimentRunnerServiceContract(ABC):
    """Runs one experiment into its output directory and records a manifest."""

    @abstractmethod
    def run(
        self, config: ExperimentConfig, coefficients: CoefficientSet
    ) -> OperationResult[ArtifactManifest]:
        """
        Writes config.json, the experiment's outputs and manifest.json.

        The manifest is written even when the experiment fails; the failure is returned.
        """
