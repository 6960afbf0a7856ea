"""Imports for the interface definition."""

from abc import ABC, abstractmethod
from typing import Callable

import numpy as np
from scipy import sparse

from defecthom.models import LinearSolution, OperationResult

Apply = Callable[[np.ndarray], np.ndarray]


class LinearSolverServiceContract(ABC):
    """Linear solves with verified true residuals."""

    @abstractmethod
    def solve_bordered(
        self,
        operator: Apply,
        preconditioner: Apply,
        rhs: np.ndarray,
        mean_target: float,
        label: str,
    ) -> OperationResult[LinearSolution]:
        """Solves [[L, 1], [mean, 0]] (u, lambda) = (rhs, mean_target) matrix-free.

        The preconditioner must return a zero-mean approximate solution of L u = r
        for zero-mean r.
        """

    @abstractmethod
    def solve_sparse(
        self, matrix: sparse.spmatrix, rhs: np.ndarray, label: str
    ) -> OperationResult[LinearSolution]:
        """Solves matrix x = rhs for one right-hand side (N,) or several (k, N)."""
