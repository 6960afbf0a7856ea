"""Imports for the interface definition."""

from abc import ABC, abstractmethod
from typing import Any

from defecthom.models import BoxGrid, CoefficientSet, OperationResult, ValidationReport


class CoefficientCatalogServiceContract(ABC):
    """Catalog of coefficient families and the check of the standing assumptions."""

    @abstractmethod
    def families(self) -> list[str]:
        """Names of the catalog families."""

    @abstractmethod
    def is_counterexample(self, name: str, params: dict[str, Any]) -> bool:
        """True for parameter sets that deliberately violate an assumption."""

    @abstractmethod
    def build_family(self, name: str, params: dict[str, Any]) -> OperationResult[CoefficientSet]:
        """Builds a coefficient set from a family name and its parameters."""

    @abstractmethod
    def validate(
        self, coefficients: CoefficientSet, probe_grid: BoxGrid
    ) -> OperationResult[ValidationReport]:
        """Measures ellipticity and decay; violations are reported as flags."""
