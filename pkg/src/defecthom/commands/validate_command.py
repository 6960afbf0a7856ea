"""Necessary imports for the validate command."""

from defecthom.models import ResultCode
from defecthom.services.configuration import ExperimentConfigReaderServiceContract
from defecthom.services.notifications import NotificationsServiceContract


class ValidateCommand:
    """Checks a configuration without solving anything."""

    def __init__(
        self,
        config_reader: ExperimentConfigReaderServiceContract,
        notifications: NotificationsServiceContract,
    ):
        self.config_reader = config_reader
        self.notifications = notifications

    def execute(self, path_location: str) -> int:
        """Returns 0 for a runnable configuration, 2 with the reason otherwise."""
        config_result = self.config_reader.read(path_location)
        if not config_result.success or config_result.data is None:
            self.notifications.error(config_result.message)
            return ResultCode(config_result.code).exit_code()
        config = config_result.data
        coefficients_result = self.config_reader.validate(config)
        if not coefficients_result.success or coefficients_result.data is None:
            self.notifications.error(coefficients_result.message)
            return ResultCode(coefficients_result.code).exit_code()
        coefficients = coefficients_result.data
        self.notifications.success(
            f'{path_location}: "{config.kind}" on {coefficients.name} (d = {coefficients.d}) '
            "is valid"
        )
        return 0
