"""Imports for the interface definition."""

from abc import ABC, abstractmethod
from typing import Optional

from defecthom.models import CellSolution, CoefficientSet, OperationResult, TorusGrid


class CellCacheServiceContract(ABC):
    """Content-addressed store of solved cell problems."""

    @abstractmethod
    def key(self, coefficients: CoefficientSet, grid: TorusGrid) -> str:
        """SHA-256 of the canonical JSON of the coefficient identity and the torus grid."""

    @abstractmethod
    def lookup(
        self, coefficients: CoefficientSet, grid: TorusGrid
    ) -> OperationResult[Optional[CellSolution]]:
        """Cached solution, or None on a miss; corrupt entries are misses."""

    @abstractmethod
    def store(
        self, coefficients: CoefficientSet, solution: CellSolution
    ) -> OperationResult[bool]:
        """Writes the solution's fields and sidecar under its key."""
