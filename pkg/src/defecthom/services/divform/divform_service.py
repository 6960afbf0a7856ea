"""Necessary imports to implement the Div Form Service"""

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from defecthom.models import (
    BoxGrid,
    CellSolution,
    CoefficientSet,
    CrossValidationReport,
    DefectSolution,
    DivFormProblem,
    Field,
    OperationResult,
    Region,
    ResultCode,
)
from defecthom.models.configuration import SolverSettings
from defecthom.services.discretization import BoxBackground, BoxOperators
from defecthom.services.fields import FieldCalculusServiceContract, fit_power_law
from defecthom.services.linear_solver import LinearSolverServiceContract
from defecthom.services.notifications import NotificationsServiceContract

from .divform_service_contract import DivFormServiceContract

CROSS_VALIDATION_FLOOR = 1e-6
CROSS_VALIDATION_CONSTANT = 10.0


class DivFormService(DivFormServiceContract):
    """
    Flux-form finite differences for -div(A grad u) on the box.

    Diagonal entries of A enter through arithmetic face means, off-diagonal entries
    (symmetric and skew alike) through nested centered differences.
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

    def assemble_A(
        self,
        coefficients: CoefficientSet,
        cell: CellSolution,
        defect: DefectSolution,
        grid: BoxGrid,
    ) -> OperationResult[DivFormProblem]:
        if defect.grid != grid:
            return OperationResult[DivFormProblem].fail(
                "defect solution lives on a different box", ResultCode.USAGE
            )
        try:
            background = BoxBackground(coefficients, cell, grid)
        except ValueError as error:
            return OperationResult[DivFormProblem].fail(str(error), ResultCode.USAGE)

        m_tilde = defect.m_tilde.values
        m = background.m_per + m_tilde
        B_tilde = defect.B_tilde.values
        A = m * background.a - (background.B_per + B_tilde)
        A_tilde = m_tilde * background.a_per + m * background.a_tilde - B_tilde

        symmetric = np.moveaxis(0.5 * (A + np.swapaxes(A, 0, 1)), (0, 1), (-2, -1))
        margin = float(np.min(np.linalg.eigvalsh(symmetric)))
        if margin <= 0.0:
            message = (
                f"symmetric part of A has eigenvalue {margin:.3e} <= 0: resolution or "
                "truncation fault"
            )
            self.notifications.error(message)
            return OperationResult[DivFormProblem].fail(message, ResultCode.SOLVER_FAULT)
        lower = coefficients.lambda_min * float(np.min(m))
        if margin < lower * (1.0 - 1e-6):
            self.notifications.warning(
                f"A ellipticity {margin:.6g} is below lambda min(m) = {lower:.6g}"
            )

        operators = BoxOperators(grid)
        d = grid.d
        column_divergence = sum(operators.partial_nodes(A[i], i) for i in range(d))
        inner = Region.ball(grid.L / 2.0).mask(grid)
        residual = column_divergence + m * background.b
        divergence_residual = float(np.max(np.abs(residual[:, inner])))

        diagnostics = {"min_m": float(np.min(m))}
        A_tilde_field = Field.matrix(grid, A_tilde, "A_tilde")
        profile_result = self.field_calculus.annular_profile(
            A_tilde_field, defect.exponents.alpha
        )
        if profile_result.success and profile_result.data is not None:
            rate, _ = fit_power_law(profile_result.data.radii, profile_result.data.values)
            if rate is not None:
                diagnostics["A_tilde_decay_rate"] = rate

        self.notifications.info(
            f"A assembled: ellipticity margin {margin:.6g}, "
            f"div A + m b = {divergence_residual:.2e} on |x| <= {grid.L / 2:g}"
        )
        return OperationResult[DivFormProblem].succeed(
            DivFormProblem(
                grid=grid,
                A=Field.matrix(grid, A, "A"),
                m=Field.scalar(grid, m, "m"),
                A_tilde=A_tilde_field,
                ellipticity_margin=margin,
                divergence_residual=divergence_residual,
                diagnostics=diagnostics,
            )
        )

    def identity_residual(
        self, problem: DivFormProblem, coefficients: CoefficientSet, u: Field
    ) -> OperationResult[float]:
        grid = problem.grid
        if u.rank != 0 or u.grid != grid:
            return OperationResult[float].fail(
                "the identity is tested on a rank 0 field on the problem's box", ResultCode.USAGE
            )
        operators = BoxOperators(grid)
        a = coefficients.sample_a(grid).values
        b = coefficients.sample_b(grid).values
        flux_form = operators.divergence_form_nodes(problem.A.values, u.values)
        nondivergence = problem.m.values * operators.nondivergence_nodes(a, b, u.values)
        difference = Field.scalar(grid, flux_form - nondivergence, "identity residual")

        numerator = self.field_calculus.lq_norm(difference, [2.0])
        if not numerator.success or numerator.data is None:
            return numerator
        squares = 0.0
        derivatives = [OperationResult[Field].succeed(u)] + [
            self.field_calculus.differentiate(u, kind) for kind in ("grad", "hess")
        ]
        for derivative in derivatives:
            if not derivative.success or derivative.data is None:
                return derivative.as_fail()
            norm = self.field_calculus.lq_norm(derivative.data, [2.0])
            if not norm.success or norm.data is None:
                return norm
            squares += norm.data**2
        if squares == 0.0:
            return OperationResult[float].succeed(0.0)
        return OperationResult[float].succeed(numerator.data / math.sqrt(squares))

    def solve_corrector_divform(
        self,
        problem: DivFormProblem,
        coefficients: CoefficientSet,
        cell: CellSolution,
        p: np.ndarray,
    ) -> OperationResult[Field]:
        grid = problem.grid
        p = np.asarray(p, dtype=np.float64)
        if p.shape != (grid.d,):
            return OperationResult[Field].fail(
                f"direction {p.tolist()} does not have {grid.d} entries", ResultCode.USAGE
            )
        label = f"w_tilde_div p={p.tolist()}"
        if not coefficients.has_defect:
            return OperationResult[Field].succeed(Field.zeros(grid, label=label))
        try:
            background = BoxBackground(coefficients, cell, grid)
        except ValueError as error:
            return OperationResult[Field].fail(str(error), ResultCode.USAGE)

        operators = BoxOperators(grid)
        matrix = operators.divergence_form_matrix(problem.A.values)
        rhs = operators.restrict(problem.m.values * background.corrector_rhs(p))
        solve_result = self.linear_solver.solve_sparse(matrix, rhs, label)
        if not solve_result.success or solve_result.data is None:
            return solve_result.with_context("divergence form corrector").as_fail()
        return OperationResult[Field].succeed(
            Field.scalar(grid, operators.extend(solve_result.data.values), label)
        )

    def solve_correctors_divform(
        self, problem: DivFormProblem, coefficients: CoefficientSet, cell: CellSolution
    ) -> OperationResult[tuple[Field, ...]]:
        directions = list(np.eye(problem.grid.d))
        with ThreadPoolExecutor(max_workers=max(1, self.settings.workers)) as executor:
            results = list(
                executor.map(
                    lambda p: self.solve_corrector_divform(problem, coefficients, cell, p),
                    directions,
                )
            )
        correctors: list[Field] = []
        for result in results:
            if not result.success or result.data is None:
                return result.as_fail()
            correctors.append(result.data)
        return OperationResult[tuple[Field, ...]].succeed(tuple(correctors))

    def cross_validate(
        self, w_nondiv: Field, w_div: Field, grid: BoxGrid, q_star: float = 2.0
    ) -> OperationResult[CrossValidationReport]:
        if w_nondiv.grid != grid or w_div.grid != grid:
            return OperationResult[CrossValidationReport].fail(
                "both correctors must live on the same box", ResultCode.USAGE
            )
        gradients = []
        for corrector in (w_nondiv, w_div):
            gradient_result = self.field_calculus.differentiate(corrector, "grad")
            if not gradient_result.success or gradient_result.data is None:
                return gradient_result.as_fail()
            gradients.append(gradient_result.data)
        difference = gradients[0] - gradients[1]
        inner = Region.ball(grid.L / 2.0)

        relative: list[float] = []
        for q in (2.0, q_star):
            reference = self.field_calculus.lq_norm(gradients[0], [q], inner)
            mismatch = self.field_calculus.lq_norm(difference, [q], inner)
            if not reference.success or reference.data is None:
                return reference.as_fail()
            if not mismatch.success or mismatch.data is None:
                return mismatch.as_fail()
            if reference.data == 0.0:
                relative.append(0.0 if mismatch.data == 0.0 else math.inf)
            else:
                relative.append(mismatch.data / reference.data)

        tolerance = max(CROSS_VALIDATION_FLOOR, CROSS_VALIDATION_CONSTANT * grid.h**2)
        report = CrossValidationReport(relative[0], relative[1], q_star, tolerance)
        if report.within_tolerance:
            self.notifications.info(f"corrector routes agree to {report.relative_l2:.2e}")
        else:
            self.notifications.warning(
                f"corrector routes differ by {report.relative_l2:.2e} "
                f"(tolerance {tolerance:.1e})"
            )
        return OperationResult[CrossValidationReport].succeed(report)
