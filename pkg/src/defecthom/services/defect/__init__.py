"""Necessary imports for export."""

from .defect_service import DefectService
from .defect_service_contract import DECAY_OBJECTS, DefectServiceContract

__all__ = ["DECAY_OBJECTS", "DefectService", "DefectServiceContract"]
