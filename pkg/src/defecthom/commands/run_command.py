"""Necessary imports for the run command."""

from typing import Callable

from defecthom.models import ResultCode
from defecthom.models.configuration import ConfigOverrides, ExperimentConfig
from defecthom.services.configuration import ExperimentConfigReaderServiceContract
from defecthom.services.experiments import ExperimentRunnerServiceContract
from defecthom.services.notifications import NotificationsServiceContract

RunnerFactory = Callable[[ExperimentConfig], ExperimentRunnerServiceContract]


class RunCommand:
    """Run command implementation."""

    def __init__(
        self,
        config_reader: ExperimentConfigReaderServiceContract,
        runner_factory: RunnerFactory,
        notifications: NotificationsServiceContract,
    ):
        self.config_reader = config_reader
        self.runner_factory = runner_factory
        self.notifications = notifications

    def execute(self, path_location: str, overrides: ConfigOverrides | None = None) -> int:
        """Reads, validates and runs one experiment; returns the process exit status."""
        config_result = self.config_reader.read(path_location, overrides)
        if not config_result.success or config_result.data is None:
            self.notifications.error(config_result.message)
            return ResultCode(config_result.code).exit_code()
        config = config_result.data

        coefficients_result = self.config_reader.validate(config)
        if not coefficients_result.success or coefficients_result.data is None:
            self.notifications.error(coefficients_result.message)
            return ResultCode(coefficients_result.code).exit_code()

        runner = self.runner_factory(config)
        manifest_result = runner.run(config, coefficients_result.data)
        if not manifest_result.success or manifest_result.data is None:
            self.notifications.error(manifest_result.message)
            return ResultCode(manifest_result.code).exit_code()
        if not manifest_result.data.contracts_met:
            return 1
        return 0
