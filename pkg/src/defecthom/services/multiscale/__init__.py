"""Necessary imports for export."""

from .multiscale_service import MultiscaleService
from .multiscale_service_contract import MultiscaleServiceContract

__all__ = ["MultiscaleService", "MultiscaleServiceContract"]
