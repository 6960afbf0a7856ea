"""Necessary imports for export."""

from .coefficient_catalog_service import CoefficientCatalogService
from .coefficient_catalog_service_contract import CoefficientCatalogServiceContract

__all__ = ["CoefficientCatalogService", "CoefficientCatalogServiceContract"]
