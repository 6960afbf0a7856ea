"""Necessary imports to implement the Linear Solver Service"""

import math

import numpy as np
from scipy import sparse
from scipy.sparse import linalg

from defecthom.models import LinearSolution, OperationResult, ResultCode, SolveReport
from defecthom.models.configuration import SolverSettings
from defecthom.services.notifications import NotificationsServiceContract

from .linear_solver_service_contract import Apply, LinearSolverServiceContract

RESTART = 100
NORM_ESTIMATE_STEPS = 8


class LinearSolverService(LinearSolverServiceContract):
    """Bordered GMRES for the cell problems, sparse LU or ILU-preconditioned GMRES on boxes."""

    def __init__(self, notifications: NotificationsServiceContract, settings: SolverSettings):
        self.notifications = notifications
        self.settings = settings

    def solve_bordered(
        self,
        operator: Apply,
        preconditioner: Apply,
        rhs: np.ndarray,
        mean_target: float,
        label: str,
    ) -> OperationResult[LinearSolution]:
        size = rhs.size

        def matvec(z: np.ndarray) -> np.ndarray:
            top = operator(z[:size]) + z[size]
            return np.append(top, np.mean(z[:size]))

        def precondition(r: np.ndarray) -> np.ndarray:
            multiplier = np.mean(r[:size])
            values = preconditioner(r[:size] - multiplier) + r[size]
            return np.append(values, multiplier)

        bordered = linalg.LinearOperator((size + 1, size + 1), matvec=matvec, dtype=np.float64)
        approximate = linalg.LinearOperator(
            (size + 1, size + 1), matvec=precondition, dtype=np.float64
        )
        full_rhs = np.append(rhs, mean_target)
        self.notifications.info(f"{label}: bordered GMRES on {size + 1} unknowns")

        solve_result = self._gmres(bordered, approximate, full_rhs, label)
        if not solve_result.success or solve_result.data is None:
            return solve_result
        solution = solve_result.data
        return OperationResult[LinearSolution].succeed(
            LinearSolution(solution.values[:size], solution.report, float(solution.values[size]))
        )

    def solve_sparse(
        self, matrix: sparse.spmatrix, rhs: np.ndarray, label: str
    ) -> OperationResult[LinearSolution]:
        columns = np.atleast_2d(rhs)
        unknowns = matrix.shape[0]
        if unknowns <= self.settings.direct_limit:
            result = self._solve_direct(matrix.tocsc(), columns, label)
        else:
            result = self._solve_iterative(matrix.tocsr(), columns, label)
        if not result.success or result.data is None:
            return result
        solution = result.data
        values = solution.values if rhs.ndim == 2 else solution.values[0]
        return OperationResult[LinearSolution].succeed(LinearSolution(values, solution.report))

    def _solve_direct(
        self, matrix: sparse.csc_matrix, columns: np.ndarray, label: str
    ) -> OperationResult[LinearSolution]:
        unknowns = matrix.shape[0]
        self.notifications.info(f"{label}: sparse LU on {unknowns} unknowns")
        try:
            factors = linalg.splu(matrix)
        except RuntimeError as error:
            message = f"{label}: factorization failed ({error})"
            self.notifications.error(message)
            return OperationResult[LinearSolution].fail(message, ResultCode.SOLVER_FAULT)

        scale = self._operator_norm(matrix)
        values = np.empty_like(columns)
        worst = 0.0
        for index, column in enumerate(columns):
            solution = factors.solve(column)
            residual = self._backward_error(matrix, solution, column, scale)
            if residual > self.settings.tolerance:
                solution = solution + factors.solve(column - matrix @ solution)
                residual = self._backward_error(matrix, solution, column, scale)
            values[index] = solution
            worst = max(worst, residual)

        report = SolveReport("lu", unknowns, 1, worst)
        return self._verified(values, report, label)

    def _solve_iterative(
        self, matrix: sparse.csr_matrix, columns: np.ndarray, label: str
    ) -> OperationResult[LinearSolution]:
        unknowns = matrix.shape[0]
        self.notifications.info(f"{label}: ILU-preconditioned GMRES on {unknowns} unknowns")
        try:
            incomplete = linalg.spilu(matrix.tocsc(), drop_tol=1e-5, fill_factor=20)
        except RuntimeError as error:
            message = f"{label}: incomplete factorization failed ({error})"
            self.notifications.error(message)
            return OperationResult[LinearSolution].fail(message, ResultCode.SOLVER_FAULT)
        approximate = linalg.LinearOperator(matrix.shape, matvec=incomplete.solve)

        values = np.empty_like(columns)
        iterations = 0
        worst = 0.0
        history: list[float] = []
        for index, column in enumerate(columns):
            result = self._gmres(matrix, approximate, column, label)
            if not result.success or result.data is None:
                return result
            values[index] = result.data.values
            iterations = max(iterations, result.data.report.iterations)
            worst = max(worst, result.data.report.residual)
            history = result.data.report.history

        return OperationResult[LinearSolution].succeed(
            LinearSolution(values, SolveReport("ilu-gmres", unknowns, iterations, worst, history))
        )

    def _gmres(
        self, operator, approximate, rhs: np.ndarray, label: str
    ) -> OperationResult[LinearSolution]:
        size = rhs.size
        norm = float(np.linalg.norm(rhs))
        if norm == 0.0:
            return OperationResult[LinearSolution].succeed(
                LinearSolution(np.zeros(size), SolveReport("gmres", size, 0, 0.0))
            )

        scale = self._operator_norm(operator)
        restart = min(size, RESTART)
        cycles = max(1, math.ceil(self.settings.max_iterations / restart))
        history: list[float] = []
        solution = np.zeros(size)
        residual = 1.0
        for _ in range(2):
            correction, _ = linalg.gmres(
                operator,
                rhs - operator @ solution,
                rtol=0.01 * self.settings.tolerance,
                atol=0.0,
                restart=restart,
                maxiter=cycles,
                M=approximate,
                callback=history.append,
                callback_type="pr_norm",
            )
            solution = solution + correction
            residual = self._backward_error(operator, solution, rhs, scale)
            if residual <= self.settings.tolerance:
                break

        report = SolveReport("gmres", size, len(history), residual, history)
        return self._verified(solution, report, label)

    def _verified(
        self, values: np.ndarray, report: SolveReport, label: str
    ) -> OperationResult[LinearSolution]:
        if not np.all(np.isfinite(values)):
            message = f"{label}: solution is not finite"
            self.notifications.error(message)
            return OperationResult[LinearSolution].fail(message, ResultCode.SOLVER_FAULT)

        if report.residual > self.settings.tolerance:
            tail = ", ".join(f"{value:.2e}" for value in report.history[-5:])
            message = (
                f"{label}: backward error {report.residual:.3e} above tolerance "
                f"{self.settings.tolerance:.1e} after {report.iterations} iterations"
            )
            if tail:
                message = f"{message} (last preconditioned residuals: {tail})"
            self.notifications.error(message)
            return OperationResult[LinearSolution].fail(message, ResultCode.SOLVER_FAULT)

        self.notifications.info(
            f"{label}: {report.method} reached backward error {report.residual:.2e} "
            f"in {report.iterations} iterations"
        )
        return OperationResult[LinearSolution].succeed(LinearSolution(values, report))

    def _operator_norm(self, operator) -> float:
        """Infinity norm of a sparse matrix, else a power iteration estimate of the 2-norm."""
        if sparse.issparse(operator):
            return float(linalg.norm(operator, np.inf))
        vector = np.random.default_rng(0).standard_normal(operator.shape[1])
        vector /= np.linalg.norm(vector)
        estimate = 0.0
        for _ in range(NORM_ESTIMATE_STEPS):
            image = operator @ vector
            length = float(np.linalg.norm(image))
            if length == 0.0:
                break
            estimate = max(estimate, length)
            vector = image / length
        return estimate

    def _backward_error(
        self, operator, solution: np.ndarray, rhs: np.ndarray, scale: float
    ) -> float:
        """Normwise backward error ||b - Ax|| / (||A|| ||x|| + ||b||)."""
        residual = float(np.linalg.norm(rhs - operator @ solution))
        denominator = scale * float(np.linalg.norm(solution)) + float(np.linalg.norm(rhs))
        if denominator == 0.0:
            return residual
        return residual / denominator
