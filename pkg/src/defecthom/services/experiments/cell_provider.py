"""Cell solutions through the cache."""

from defecthom.models import CellSolution, CoefficientSet, OperationResult, TorusGrid
from defecthom.services.cache import CellCacheServiceContract
from defecthom.services.cell import CellServiceContract
from defecthom.services.notifications import NotificationsServiceContract


class CellProvider:
    """Returns a cached cell solution, solving and storing it on a miss."""

    def __init__(
        self,
        cell: CellServiceContract,
        cache: CellCacheServiceContract,
        notifications: NotificationsServiceContract,
    ):
        self.cell = cell
        self.cache = cache
        self.notifications = notifications

    def provide(
        self, coefficients: CoefficientSet, grid: TorusGrid
    ) -> OperationResult[CellSolution]:
        """Cell solution of the coefficients on the torus grid."""
        lookup_result = self.cache.lookup(coefficients, grid)
        if lookup_result.success and lookup_result.data is not None:
            self.notifications.info(f"cell problems of {coefficients.name} taken from the cache")
            return OperationResult[CellSolution].succeed(lookup_result.data)

        solve_result = self.cell.solve_all(coefficients, grid)
        if not solve_result.success or solve_result.data is None:
            return solve_result
        store_result = self.cache.store(coefficients, solve_result.data)
        if not store_result.success:
            self.notifications.warning(f"cell solution not cached: {store_result.message}")
        return solve_result
