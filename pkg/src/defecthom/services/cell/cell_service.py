"""Necessary imports to implement the Cell Service"""

from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from defecthom.models import (
    CellSolution,
    CoefficientSet,
    Field,
    OperationResult,
    ResultCode,
    TorusGrid,
)
from defecthom.models.configuration import SolverSettings
from defecthom.services.discretization import SpectralOperators
from defecthom.services.fields import FieldCalculusServiceContract
from defecthom.services.linear_solver import LinearSolverServiceContract
from defecthom.services.notifications import NotificationsServiceContract

from .cell_service_contract import CellServiceContract

FREDHOLM_TOLERANCE = 1e-8
CONSISTENCY_TOLERANCE = 1e-8
A_STAR_TOLERANCE = 1e-6


class CellService(CellServiceContract):
    """
    Spectral discretization of the cell problems on the torus.

    Both kernel problems are bordered with a mean constraint; for the corrector the
    Lagrange multiplier equals <m_per rhs> and is reported as a solvability check.
    """

    def __init__(
        self,
        notifications: NotificationsServiceContract,
        linear_solver: LinearSolverServiceContract,
        field_calculus: FieldCalculusServiceContract,
        settings: SolverSettings,
    ):
        self.notifications = notifications
        self.linear_solver = linear_solver
        self.field_calculus = field_calculus
        self.settings = settings

    def solve_invariant_measure(
        self, coefficients: CoefficientSet, grid: TorusGrid
    ) -> OperationResult[Field]:
        if coefficients.d != grid.d:
            return OperationResult[Field].fail(
                f"torus dimension {grid.d} differs from d = {coefficients.d}", ResultCode.USAGE
            )
        operators = SpectralOperators(grid)
        a = coefficients.sample_a_per(grid).values
        b = coefficients.sample_b_per(grid).values
        self._check_peclet(a, b, grid.h, "m_per")
        a_bar = operators.mean(a)

        def adjoint(z: np.ndarray) -> np.ndarray:
            return operators.adjoint(a, b, z.reshape(grid.shape)).ravel()

        def preconditioner(r: np.ndarray) -> np.ndarray:
            return operators.constant_inverse(a_bar, r.reshape(grid.shape)).ravel()

        solve_result = self.linear_solver.solve_bordered(
            adjoint, preconditioner, np.zeros(int(np.prod(grid.shape))), 1.0, "m_per"
        )
        if not solve_result.success or solve_result.data is None:
            return solve_result.with_context("invariant measure").as_fail()

        values = solve_result.data.values.reshape(grid.shape)
        minimum = float(np.min(values))
        if minimum <= 0.0:
            message = (
                f"invariant measure has minimum {minimum:.3e} <= 0: discretization fault, "
                f"refine the cell grid beyond n = {grid.n}"
            )
            self.notifications.error(message)
            return OperationResult[Field].fail(message, ResultCode.SOLVER_FAULT)
        self.notifications.info(f"m_per: min {minimum:.6g}, mean {operators.mean(values):.15g}")
        return OperationResult[Field].succeed(Field.scalar(grid, values, "m_per"))

    def drift(self, m_per: Field, coefficients: CoefficientSet) -> OperationResult[np.ndarray]:
        if not isinstance(m_per.grid, TorusGrid):
            return OperationResult[np.ndarray].fail(
                "the drift is a cell average and needs a torus grid", ResultCode.USAGE
            )
        b = coefficients.sample_b_per(m_per.grid).values
        flux = Field.vector(m_per.grid, m_per.values * b, "m_per b_per")
        mean_result = self.field_calculus.mean(flux)
        if not mean_result.success or mean_result.data is None:
            return mean_result.as_fail()
        return OperationResult[np.ndarray].succeed(np.atleast_1d(mean_result.data))

    def solve_corrector_periodic(
        self,
        coefficients: CoefficientSet,
        grid: TorusGrid,
        p: np.ndarray,
        m_per: Optional[Field] = None,
    ) -> OperationResult[Field]:
        p = np.asarray(p, dtype=np.float64)
        if p.shape != (grid.d,):
            return OperationResult[Field].fail(
                f"direction {p.tolist()} does not have {grid.d} entries", ResultCode.USAGE
            )
        if m_per is None:
            measure_result = self.solve_invariant_measure(coefficients, grid)
            if not measure_result.success or measure_result.data is None:
                return measure_result
            m_per = measure_result.data

        drift_result = self.drift(m_per, coefficients)
        if not drift_result.success or drift_result.data is None:
            return drift_result.as_fail()
        drift = drift_result.data
        if np.max(np.abs(drift)) > FREDHOLM_TOLERANCE:
            return self._drift_failure(drift)

        operators = SpectralOperators(grid)
        a = coefficients.sample_a_per(grid).values
        b = coefficients.sample_b_per(grid).values
        rhs = -np.tensordot(p, b, axes=(0, 0))
        pairing = float(np.mean(m_per.values * rhs))
        if abs(pairing) > FREDHOLM_TOLERANCE:
            message = (
                f"corrector right-hand side is not orthogonal to m_per: <m_per rhs> = "
                f"{pairing:.3e}"
            )
            self.notifications.error(message)
            return OperationResult[Field].fail(message, ResultCode.PRECONDITION)

        a_bar = operators.mean(a)
        label = f"w_per p={p.tolist()}"

        def operator(z: np.ndarray) -> np.ndarray:
            return operators.nondivergence(a, b, z.reshape(grid.shape)).ravel()

        def preconditioner(r: np.ndarray) -> np.ndarray:
            return operators.constant_inverse(a_bar, r.reshape(grid.shape)).ravel()

        solve_result = self.linear_solver.solve_bordered(
            operator, preconditioner, rhs.ravel(), 0.0, label
        )
        if not solve_result.success or solve_result.data is None:
            return solve_result.with_context("periodic corrector").as_fail()
        multiplier = solve_result.data.multiplier
        if abs(multiplier) > FREDHOLM_TOLERANCE:
            self.notifications.warning(
                f"{label}: Lagrange multiplier {multiplier:.3e} signals a solvability defect"
            )
        values = solve_result.data.values.reshape(grid.shape)
        return OperationResult[Field].succeed(Field.scalar(grid, values, label))

    def solve_B_periodic(
        self, coefficients: CoefficientSet, grid: TorusGrid, m_per: Field
    ) -> OperationResult[Field]:
        d = grid.d
        operators = SpectralOperators(grid)
        flux = self._measure_flux(coefficients, grid, m_per.values, operators)
        scale = max(1.0, float(np.max(np.abs(flux))))

        averages = operators.mean(flux)
        divergence = operators.divergence(flux)
        worst_mean = float(np.max(np.abs(averages)))
        worst_divergence = float(np.max(np.abs(divergence)))
        if worst_mean > CONSISTENCY_TOLERANCE * scale:
            return self._consistency_failure("mean", worst_mean)
        if worst_divergence > CONSISTENCY_TOLERANCE * scale:
            return self._consistency_failure("divergence", worst_divergence)

        potential = np.zeros((d, d) + grid.shape)
        for i in range(d):
            for j in range(i + 1, d):
                curl = operators.partial(flux[i], j) - operators.partial(flux[j], i)
                potential[i, j] = operators.inverse_laplacian(curl)
                potential[j, i] = -potential[i, j]
        B = Field.skew_part(grid, potential, "B_per")

        mismatch = float(np.max(np.abs(operators.divergence(B.values) - flux))) if d > 1 else 0.0
        if mismatch > CONSISTENCY_TOLERANCE * scale:
            message = f"column divergence of B_per misses the flux by {mismatch:.3e}"
            self.notifications.error(message)
            return OperationResult[Field].fail(message, ResultCode.SOLVER_FAULT)
        self.notifications.info(f"B_per: column divergence matches the flux to {mismatch:.2e}")
        return OperationResult[Field].succeed(B)

    def homogenized_tensor(
        self, cell: CellSolution, coefficients: CoefficientSet
    ) -> OperationResult[tuple[np.ndarray, float]]:
        grid = cell.grid
        d = grid.d
        operators = SpectralOperators(grid)
        a = coefficients.sample_a_per(grid).values
        b = coefficients.sample_b_per(grid).values
        m = cell.m_per.values
        A = cell.A_per.values

        divergence_form = np.empty((d, d))
        nondivergence = np.empty((d, d))
        for j, corrector in enumerate(cell.w_per):
            gradient = operators.gradient(corrector.values)
            for i in range(d):
                flux = A[i, j] + np.sum(A[i] * gradient, axis=0)
                divergence_form[i, j] = float(np.mean(flux))
                average = m * (a[i, j] + 2.0 * np.sum(a[i] * gradient, axis=0))
                nondivergence[i, j] = float(np.mean(average - m * b[i] * corrector.values))

        symmetric = 0.5 * (divergence_form + divergence_form.T)
        other = 0.5 * (nondivergence + nondivergence.T)
        discrepancy = float(np.max(np.abs(symmetric - other)))
        if discrepancy > A_STAR_TOLERANCE:
            message = (
                f"homogenized tensor routes disagree by {discrepancy:.3e} "
                f"(tolerance {A_STAR_TOLERANCE:.0e})"
            )
            self.notifications.error(message)
            return OperationResult[tuple[np.ndarray, float]].fail(
                message, ResultCode.CONTRACT_VIOLATION
            )
        return OperationResult[tuple[np.ndarray, float]].succeed((divergence_form, discrepancy))

    def solve_all(
        self, coefficients: CoefficientSet, grid: TorusGrid
    ) -> OperationResult[CellSolution]:
        measure_result = self.solve_invariant_measure(coefficients, grid)
        if not measure_result.success or measure_result.data is None:
            return measure_result.as_fail()
        m_per = measure_result.data

        drift_result = self.drift(m_per, coefficients)
        if not drift_result.success or drift_result.data is None:
            return drift_result.as_fail()
        drift = drift_result.data
        if np.max(np.abs(drift)) > FREDHOLM_TOLERANCE:
            return self._drift_failure(drift).as_fail()

        directions = list(np.eye(grid.d))
        with ThreadPoolExecutor(max_workers=max(1, self.settings.workers)) as executor:
            corrector_results = list(
                executor.map(
                    lambda p: self.solve_corrector_periodic(coefficients, grid, p, m_per),
                    directions,
                )
            )
        correctors: list[Field] = []
        for result in corrector_results:
            if not result.success or result.data is None:
                return result.as_fail()
            correctors.append(result.data)

        B_result = self.solve_B_periodic(coefficients, grid, m_per)
        if not B_result.success or B_result.data is None:
            return B_result.as_fail()
        B_per = B_result.data

        a = coefficients.sample_a_per(grid).values
        b = coefficients.sample_b_per(grid).values
        A_per = Field.matrix(grid, m_per.values * a - B_per.values, "A_per")
        operators = SpectralOperators(grid)
        residuals = {
            "m_per_adjoint": float(np.max(np.abs(operators.adjoint(a, b, m_per.values)))),
            "m_per_mean": abs(float(operators.mean(m_per.values)) - 1.0),
            "div_A_per": float(
                np.max(np.abs(operators.divergence(A_per.values) + m_per.values * b))
            ),
        }
        for index, corrector in enumerate(correctors):
            applied = operators.nondivergence(a, b, corrector.values)
            residuals[f"w_per_{index}"] = float(np.max(np.abs(applied + b[index])))

        partial = CellSolution(
            grid=grid,
            m_per=m_per,
            w_per=tuple(correctors),
            B_per=B_per,
            A_per=A_per,
            A_star=np.eye(grid.d),
            drift=drift,
            residuals=residuals,
        )
        tensor_result = self.homogenized_tensor(partial, coefficients)
        if not tensor_result.success or tensor_result.data is None:
            return tensor_result.as_fail()
        A_star, discrepancy = tensor_result.data

        symmetric = 0.5 * (A_star + A_star.T)
        margin = float(np.min(np.linalg.eigvalsh(symmetric)))
        lower = coefficients.lambda_min * float(np.min(m_per.values))
        if margin < lower - A_STAR_TOLERANCE:
            self.notifications.warning(
                f"A* ellipticity {margin:.6g} is below lambda min(m_per) = {lower:.6g}"
            )
        self.notifications.success(
            f"cell problems solved on n = {grid.n}: A* = {np.array2string(A_star, precision=8)}"
        )
        return OperationResult[CellSolution].succeed(
            CellSolution(
                grid=grid,
                m_per=m_per,
                w_per=tuple(correctors),
                B_per=B_per,
                A_per=A_per,
                A_star=A_star,
                drift=drift,
                A_star_discrepancy=discrepancy,
                ellipticity_margin=margin,
                residuals=residuals,
            )
        )

    def _measure_flux(
        self,
        coefficients: CoefficientSet,
        grid: TorusGrid,
        m: np.ndarray,
        operators: SpectralOperators,
    ) -> np.ndarray:
        """F_j = m b_j + d_i (m a_ij)."""
        a = coefficients.sample_a_per(grid).values
        b = coefficients.sample_b_per(grid).values
        return m * b + operators.divergence(m * a)

    def _check_peclet(self, a: np.ndarray, b: np.ndarray, h: float, label: str):
        ellipticity = float(np.min(np.linalg.eigvalsh(np.moveaxis(a, (0, 1), (-2, -1)))))
        peclet = float(np.max(np.sqrt(np.sum(b**2, axis=0)))) * h / (2.0 * ellipticity)
        if peclet >= 1.0:
            self.notifications.warning(
                f"{label}: cell Peclet number {peclet:.2f} >= 1, refine the grid"
            )

    def _drift_failure(self, drift: np.ndarray) -> OperationResult[Field]:
        message = (
            f"zero-drift condition violated: <m_per b_per> = {np.array2string(drift)}, "
            "no periodic corrector exists"
        )
        self.notifications.error(message)
        return OperationResult[Field].fail(message, ResultCode.PRECONDITION)

    def _consistency_failure(self, what: str, value: float) -> OperationResult[Field]:
        message = (
            f"flux m_per b_per + div(m_per a_per) has {what} {value:.3e}: "
            "upstream invariant measure fault"
        )
        self.notifications.error(message)
        return OperationResult[Field].fail(message, ResultCode.SOLVER_FAULT)
