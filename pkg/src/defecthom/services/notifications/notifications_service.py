"""Notifications Service - colored console reporting."""

import sys

from .notifications_service_contract import NotificationsServiceContract


class NotificationsService(NotificationsServiceContract):
    """
    Console notifications with ANSI colors per message type.

    Info and success go to standard output, warnings and errors to standard error
    so that piped reports stay clean.
    """

    def info(self, text: str):
        print(f"{_Colors.OKBLUE}{text}{_Colors.ENDC}")

    def error(self, text: str):
        print(f"{_Colors.FAIL}{text}{_Colors.ENDC}", file=sys.stderr)

    def success(self, text: str):
        print(f"{_Colors.OKGREEN}{text}{_Colors.ENDC}")

    def warning(self, text: str):
        print(f"{_Colors.WARNING}{text}{_Colors.ENDC}", file=sys.stderr)


class QuietNotificationsService(NotificationsService):
    """Console notifications without info messages."""

    def info(self, text: str):
        pass


class _Colors:
    """ANSI color codes for terminal output formatting."""

    OKBLUE = "\033[94m"
    OKGREEN = "\033[92m"
    WARNING = "\033[93m"
    FAIL = "\033[91m"
    ENDC = "\033[0m"
