"""Necessary imports for export."""

from .field_storage_service import FIELD_MAGIC, FieldStorageService
from .field_storage_service_contract import FieldStorageServiceContract

__all__ = ["FIELD_MAGIC", "FieldStorageService", "FieldStorageServiceContract"]
