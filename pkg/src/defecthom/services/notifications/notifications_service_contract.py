"""Notifications Service Contract - progress and diagnostics reporting of solver runs."""

from abc import ABC, abstractmethod


class NotificationsServiceContract(ABC):
    """
    Abstract base class for reporting solver progress.

    Solvers report their choices and achieved residuals through info, near-limit
    conditions through warning, and failures through error before returning them.
    """

    @abstractmethod
    def info(self, text: str):
        """
        Report routine progress such as solver choice or achieved residual.

        Args:
            text: The message to report.
        """

    @abstractmethod
    def error(self, text: str):
        """
        Report a failure that is about to be returned to the caller.

        Args:
            text: The message to report.
        """

    @abstractmethod
    def success(self, text: str):
        """
        Report a completed experiment or a met contract.

        Args:
            text: The message to report.
        """

    @abstractmethod
    def warning(self, text: str):
        """
        Report a condition that does not stop the run but weakens its results.

        Args:
            text: The message to report.
        """
