"""Mock Linear Solver Service - returns preset results and records calls."""

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from defecthom.models import LinearSolution, OperationResult

from .linear_solver_service_contract import Apply, LinearSolverServiceContract


@dataclass
class SolveSparseParams:
    """Params of the solve_sparse method."""

    matrix: sparse.spmatrix
    rhs: np.ndarray
    label: str


class MockLinearSolverService(LinearSolverServiceContract):
    """Answers with the result preset for the label, else with the *_result attribute."""

    def __init__(self):
        self.solve_bordered_labels: list[str] = []
        self.solve_bordered_result = OperationResult[LinearSolution].fail("no preset solution")
        self.solve_sparse_params: list[SolveSparseParams] = []
        self.solve_sparse_result = OperationResult[LinearSolution].fail("no preset solution")
        self.solve_sparse_result_map: dict[str, OperationResult[LinearSolution]] = {}

    def solve_bordered(
        self,
        operator: Apply,
        preconditioner: Apply,
        rhs: np.ndarray,
        mean_target: float,
        label: str,
    ) -> OperationResult[LinearSolution]:
        self.solve_bordered_labels.append(label)
        return self.solve_bordered_result

    def solve_sparse(
        self, matrix: sparse.spmatrix, rhs: np.ndarray, label: str
    ) -> OperationResult[LinearSolution]:
        self.solve_sparse_params.append(SolveSparseParams(matrix, rhs, label))
        return self.solve_sparse_result_map.get(label, self.solve_sparse_result)
