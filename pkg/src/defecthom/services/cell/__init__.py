"""Necessary imports for export."""

from .cell_service import CellService
from .cell_service_contract import CellServiceContract

__all__ = ["CellService", "CellServiceContract"]
