"""Necessary imports for export."""

from .cell_cache_service import CellCacheService, resolve_cache_root
from .cell_cache_service_contract import CellCacheServiceContract

__all__ = ["CellCacheService", "CellCacheServiceContract", "resolve_cache_root"]
