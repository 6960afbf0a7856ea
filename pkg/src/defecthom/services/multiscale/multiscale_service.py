"""Necessary imports to implement the Multiscale Service"""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np
from scipy import stats
from scipy.interpolate import RegularGridInterpolator

from defecthom.models import (
    CellSolution,
    CoefficientSet,
    ConvergenceReport,
    DefectSolution,
    DomainGrid,
    EpsProblem,
    Field,
    OperationResult,
    RateFit,
    Region,
    ResultCode,
    ScaleRow,
    TwoScaleError,
)
from defecthom.models.configuration import SolverSettings
from defecthom.services.discretization import BoxOperators, tile_periodic
from defecthom.services.fields import FieldCalculusServiceContract
from defecthom.services.linear_solver import LinearSolverServiceContract
from defecthom.services.notifications import NotificationsServiceContract

from .multiscale_service_contract import MultiscaleServiceContract

POINTS_PER_PERIOD = 16
COLLAR_PERIODS = 2.0
MIN_FIT_POINTS = 3
CONFIDENCE = 0.95


class MultiscaleService(MultiscaleServiceContract):
    """Second order finite differences on the domain; scales are solved independently."""

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

    def solve_eps(
        self, problem: EpsProblem, coefficients: CoefficientSet, eps: float
    ) -> OperationResult[Field]:
        domain = problem.domain
        if coefficients.d != domain.d:
            return OperationResult[Field].fail(
                f"domain dimension {domain.d} differs from d = {coefficients.d}",
                ResultCode.USAGE,
            )
        if domain.h > eps / POINTS_PER_PERIOD + 1e-15:
            return OperationResult[Field].fail(
                f"spacing {domain.h:g} leaves fewer than {POINTS_PER_PERIOD} points per "
                f"period at eps = {problem.eps_label(eps)}",
                ResultCode.PRECONDITION,
            )
        a, b = coefficients.sample_rescaled(domain, eps)
        b = b / eps
        self._check_peclet(a, b, domain.h, eps, problem)

        operators = BoxOperators(domain)
        label = f"u_eps eps={problem.eps_label(eps)}"
        solve_result = self.linear_solver.solve_sparse(
            operators.nondivergence_matrix(a, b), operators.restrict(problem.f.values), label
        )
        if not solve_result.success or solve_result.data is None:
            return solve_result.with_context("oscillatory problem").as_fail()
        values = operators.extend(solve_result.data.values)

        if np.all(problem.f.values >= 0.0):
            scale = max(1.0, float(np.max(np.abs(values))))
            if float(np.min(values)) < -self.settings.tolerance * scale:
                self.notifications.warning(
                    f"{label}: minimum {np.min(values):.3e} < 0 for f >= 0, the scheme is "
                    "not monotone at this resolution"
                )
        return OperationResult[Field].succeed(Field.scalar(domain, values, label))

    def solve_homogenized(self, problem: EpsProblem, A_star: np.ndarray) -> OperationResult[Field]:
        domain = problem.domain
        A_star = np.asarray(A_star, dtype=np.float64)
        if A_star.shape != (domain.d, domain.d):
            return OperationResult[Field].fail(
                f"A* has shape {A_star.shape}, expected {(domain.d, domain.d)}", ResultCode.USAGE
            )
        symmetric = 0.5 * (A_star + A_star.T)
        margin = float(np.min(np.linalg.eigvalsh(symmetric)))
        if margin <= 0.0:
            return OperationResult[Field].fail(
                f"homogenized tensor is not elliptic: smallest eigenvalue {margin:.3e}",
                ResultCode.PRECONDITION,
            )
        operators = BoxOperators(domain)
        shape = domain.shape
        a = np.broadcast_to(symmetric[(...,) + (None,) * domain.d], symmetric.shape + shape)
        b = np.zeros((domain.d,) + shape)
        solve_result = self.linear_solver.solve_sparse(
            operators.nondivergence_matrix(a, b), operators.restrict(problem.f.values), "u_star"
        )
        if not solve_result.success or solve_result.data is None:
            return solve_result.with_context("homogenized problem").as_fail()
        return OperationResult[Field].succeed(
            Field.scalar(domain, operators.extend(solve_result.data.values), "u_star")
        )

    def two_scale_error(
        self,
        problem: EpsProblem,
        cell: CellSolution,
        u_eps: Field,
        u_star: Field,
        eps: float,
        defect: Optional[DefectSolution] = None,
    ) -> OperationResult[TwoScaleError]:
        domain = problem.domain
        if u_eps.grid != domain or u_star.grid != domain:
            return OperationResult[TwoScaleError].fail(
                "u_eps and u_star must live on the problem domain", ResultCode.USAGE
            )
        correctors_result = self._corrector_samples(cell, defect, domain, eps)
        if not correctors_result.success or correctors_result.data is None:
            return correctors_result.as_fail()
        correctors = correctors_result.data

        gradient_result = self.field_calculus.differentiate(u_star, "grad")
        if not gradient_result.success or gradient_result.data is None:
            return gradient_result.as_fail()
        expansion = u_star.values + eps * np.sum(gradient_result.data.values * correctors, axis=0)
        error = Field.scalar(domain, u_eps.values - expansion, "two-scale error")
        error_gradient = self.field_calculus.differentiate(error, "grad")
        if not error_gradient.success or error_gradient.data is None:
            return error_gradient.as_fail()

        interior = Region.interior(COLLAR_PERIODS * eps)
        norms = [
            self.field_calculus.lq_norm(u_eps - u_star, [2.0]),
            self.field_calculus.lq_norm(error, [2.0], interior),
            self.field_calculus.lq_norm(error_gradient.data, [2.0], interior),
            self.field_calculus.lq_norm(error_gradient.data, [math.inf], interior),
        ]
        for norm in norms:
            if not norm.success or norm.data is None:
                return norm.as_fail()
        l2, value, gradient, sup = (norm.data for norm in norms)
        return OperationResult[TwoScaleError].succeed(
            TwoScaleError(l2=l2, h1_interior=math.hypot(value, gradient), w1inf_interior=sup)
        )

    def rate_fit(self, scales: list[float], values: list[float]) -> OperationResult[RateFit]:
        if len(scales) != len(values):
            return OperationResult[RateFit].fail(
                f"{len(scales)} scales against {len(values)} values", ResultCode.USAGE
            )
        if len(values) < MIN_FIT_POINTS:
            return OperationResult[RateFit].fail(
                f"a rate needs at least {MIN_FIT_POINTS} points, got {len(values)}",
                ResultCode.USAGE,
            )
        for scale, value in zip(scales, values):
            if not (scale > 0.0 and value > 0.0 and math.isfinite(value)):
                return OperationResult[RateFit].fail(
                    f"non-positive value {value:g} at scale {scale:g} has no logarithm",
                    ResultCode.USAGE,
                )
        x = np.log(np.asarray(scales, dtype=np.float64))
        y = np.log(np.asarray(values, dtype=np.float64))
        slope, intercept = np.polyfit(x, y, 1)
        residuals = y - (slope * x + intercept)
        dof = x.size - 2
        spread = float(np.sum((x - np.mean(x)) ** 2))
        if spread == 0.0:
            return OperationResult[RateFit].fail("all scales coincide", ResultCode.USAGE)
        standard_error = math.sqrt(float(np.sum(residuals**2)) / dof / spread)
        band = float(stats.t.ppf(0.5 + CONFIDENCE / 2.0, dof)) * standard_error
        return OperationResult[RateFit].succeed(
            RateFit(
                slope=float(slope),
                intercept=float(intercept),
                residual=float(np.sqrt(np.mean(residuals**2))),
                band=band,
                points=int(x.size),
            )
        )

    def hessian_scaling(
        self, problem: EpsProblem, coefficients: CoefficientSet, beta: float = 2.0
    ) -> OperationResult[RateFit]:
        if not beta >= 1.0:
            return OperationResult[RateFit].fail(
                f"Hessian exponent must be at least 1, got {beta}", ResultCode.USAGE
            )

        def hessian_norm(eps: float) -> OperationResult[float]:
            solution = self.solve_eps(problem, coefficients, eps)
            if not solution.success or solution.data is None:
                return solution.as_fail()
            return self._hessian_norm(solution.data, beta)

        with ThreadPoolExecutor(max_workers=max(1, self.settings.workers)) as executor:
            results = list(executor.map(hessian_norm, problem.eps_list))
        norms: list[float] = []
        for result in results:
            if not result.success or result.data is None:
                return result.as_fail()
            norms.append(result.data)

        fit_result = self.rate_fit(list(problem.eps_list), norms)
        if fit_result.success and fit_result.data is not None:
            self.notifications.info(
                f"|D2 u_eps|_L{beta:g} ~ eps^{fit_result.data.slope:.3f} "
                f"(band {fit_result.data.band:.2e})"
            )
        return fit_result

    def convergence_study(
        self,
        problem: EpsProblem,
        coefficients: CoefficientSet,
        cell: CellSolution,
        defect: Optional[DefectSolution] = None,
    ) -> OperationResult[ConvergenceReport]:
        star_result = self.solve_homogenized(problem, cell.A_star)
        if not star_result.success or star_result.data is None:
            return star_result.as_fail()
        u_star = star_result.data
        ablation = defect is not None and coefficients.has_defect

        def scale_row(eps: float) -> OperationResult[ScaleRow]:
            solution = self.solve_eps(problem, coefficients, eps)
            if not solution.success or solution.data is None:
                return solution.as_fail()
            u_eps = solution.data
            errors = self.two_scale_error(problem, cell, u_eps, u_star, eps, defect)
            if not errors.success or errors.data is None:
                return errors.as_fail()
            hessian = self._hessian_norm(u_eps, 2.0)
            if not hessian.success or hessian.data is None:
                return hessian.as_fail()
            row = ScaleRow(
                eps=eps,
                l2_error=errors.data.l2,
                h1_error=errors.data.h1_interior,
                w1inf_error=errors.data.w1inf_interior,
                hessian_norm=hessian.data,
            )
            if ablation:
                periodic = self.two_scale_error(problem, cell, u_eps, u_star, eps)
                if not periodic.success or periodic.data is None:
                    return periodic.as_fail()
                row.h1_error_periodic_only = periodic.data.h1_interior
                row.w1inf_error_periodic_only = periodic.data.w1inf_interior
            return OperationResult[ScaleRow].succeed(row)

        with ThreadPoolExecutor(max_workers=max(1, self.settings.workers)) as executor:
            results = list(executor.map(scale_row, problem.eps_list))
        rows: list[ScaleRow] = []
        for result in results:
            if not result.success or result.data is None:
                return result.as_fail()
            rows.append(result.data)

        report = ConvergenceReport(rows)
        columns = ["l2_error", "h1_error", "w1inf_error", "hessian_norm"]
        if ablation:
            columns += ["h1_error_periodic_only", "w1inf_error_periodic_only"]
        for name in columns:
            fit_result = self.rate_fit(list(problem.eps_list), report.column(name))
            if fit_result.success and fit_result.data is not None:
                report.slopes[name] = fit_result.data
            else:
                report.flags.append(f"{name}: no rate, {fit_result.message}")

        increases = self._increases(report.column("l2_error"))
        if increases == 1:
            report.flags.append("l2_error: one non-monotone step")
        elif increases > 1:
            report.flags.append(f"l2_error: {increases} increasing steps, no convergence")
        if ablation and self._increases(report.column("w1inf_error")) > 0:
            report.flags.append("w1inf_error: not decreasing with the defect corrector")
        for flag in report.flags:
            self.notifications.warning(flag)
        self.notifications.success(
            f"convergence study over {len(rows)} scales: "
            + ", ".join(f"{key} slope {fit.slope:.3f}" for key, fit in report.slopes.items())
        )
        return OperationResult[ConvergenceReport].succeed(report)

    def _corrector_samples(
        self,
        cell: CellSolution,
        defect: Optional[DefectSolution],
        domain: DomainGrid,
        eps: float,
    ) -> OperationResult[np.ndarray]:
        """w_j(x / eps) on the domain nodes, shape (d, ...)."""
        if cell.d != domain.d or (defect is not None and defect.grid.d != domain.d):
            return OperationResult[np.ndarray].fail(
                "cell, defect and domain differ in dimension", ResultCode.USAGE
            )
        try:
            samples = np.stack(
                [tile_periodic(w.values, cell.grid, domain, scale=eps) for w in cell.w_per]
            )
        except ValueError as error:
            return OperationResult[np.ndarray].fail(str(error), ResultCode.USAGE)
        if defect is None:
            return OperationResult[np.ndarray].succeed(samples)

        axes = (defect.grid.axis(),) * domain.d
        points = (domain.coordinates() / eps).reshape(domain.d, -1).T
        for index, corrector in enumerate(defect.w_tilde):
            interpolator = RegularGridInterpolator(
                axes, corrector.values, method="linear", bounds_error=False, fill_value=0.0
            )
            samples[index] += interpolator(points).reshape(domain.shape)
        return OperationResult[np.ndarray].succeed(samples)

    def _hessian_norm(self, u: Field, beta: float) -> OperationResult[float]:
        hessian = self.field_calculus.differentiate(u, "hess")
        if not hessian.success or hessian.data is None:
            return hessian.as_fail()
        return self.field_calculus.lq_norm(hessian.data, [beta])

    def _increases(self, values: list[float]) -> int:
        return sum(1 for previous, current in zip(values, values[1:]) if current > previous)

    def _check_peclet(
        self, a: np.ndarray, b: np.ndarray, h: float, eps: float, problem: EpsProblem
    ):
        ellipticity = float(np.min(np.linalg.eigvalsh(np.moveaxis(a, (0, 1), (-2, -1)))))
        peclet = float(np.max(np.sqrt(np.sum(b**2, axis=0)))) * h / (2.0 * ellipticity)
        if peclet >= 1.0:
            self.notifications.warning(
                f"eps = {problem.eps_label(eps)}: cell Peclet number {peclet:.2f} >= 1, "
                "refine the domain grid"
            )
