"""Necessary imports for export."""

from .divform_service import DivFormService
from .divform_service_contract import DivFormServiceContract

__all__ = ["DivFormService", "DivFormServiceContract"]
