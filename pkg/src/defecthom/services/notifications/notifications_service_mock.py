"""Mock Notifications Service - records reported messages for assertions."""

from typing import Any

from .notifications_service_contract import NotificationsServiceContract


class MockNotificationsService(NotificationsServiceContract):
    """
    Records every notification instead of printing it.

    Attributes:
        params: One {"type", "text"} entry per call, in call order.
    """

    params: list[Any] = []

    def __init__(self):
        self.params = []

    def info(self, text: str):
        self.params.append({"type": "info", "text": text})

    def error(self, text: str):
        self.params.append({"type": "error", "text": text})

    def success(self, text: str):
        self.params.append({"type": "success", "text": text})

    def warning(self, text: str):
        self.params.append({"type": "warning", "text": text})

    def find_notifications(self, search_term: str, kind: str | None = None) -> list[Any]:
        """Notifications containing the search term, optionally of one type only."""
        return [
            param
            for param in self.params
            if search_term in param["text"] and (kind is None or param["type"] == kind)
        ]
