"""Mock Cell Cache Service - returns preset results and records calls."""

from typing import Optional

from defecthom.models import CellSolution, CoefficientSet, OperationResult, TorusGrid

from .cell_cache_service_contract import CellCacheServiceContract


class MockCellCacheService(CellCacheServiceContract):
    """Every operation answers with its preset *_result attribute."""

    def __init__(self):
        self.key_params: list[tuple[CoefficientSet, TorusGrid]] = []
        self.key_result = "0" * 64
        self.lookup_params: list[tuple[CoefficientSet, TorusGrid]] = []
        self.lookup_result = OperationResult[Optional[CellSolution]].succeed(None)
        self.store_params: list[tuple[CoefficientSet, CellSolution]] = []
        self.store_result = OperationResult[bool].succeed(True)

    def key(self, coefficients: CoefficientSet, grid: TorusGrid) -> str:
        self.key_params.append((coefficients, grid))
        return self.key_result

    def lookup(
        self, coefficients: CoefficientSet, grid: TorusGrid
    ) -> OperationResult[Optional[CellSolution]]:
        self.lookup_params.append((coefficients, grid))
        return self.lookup_result

    def store(
        self, coefficients: CoefficientSet, solution: CellSolution
    ) -> OperationResult[bool]:
        self.store_params.append((coefficients, solution))
        return self.store_result
