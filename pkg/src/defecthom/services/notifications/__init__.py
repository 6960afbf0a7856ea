"""Necessary imports for export."""

from .notifications_service import NotificationsService, QuietNotificationsService
from .notifications_service_contract import NotificationsServiceContract

__all__ = ["NotificationsService", "NotificationsServiceContract", "QuietNotificationsService"]
