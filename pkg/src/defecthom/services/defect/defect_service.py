"""Necessary imports to implement the Defect Service"""

import math
from typing import Optional

import numpy as np
from scipy import signal

from defecthom.models import (
    BoxGrid,
    CellSolution,
    CoefficientSet,
    DecayExponents,
    DecayReport,
    DefectSolution,
    Evaluator,
    Field,
    OperationResult,
    ProbeReport,
    Region,
    ResultCode,
    ShellProfile,
)
from defecthom.models.configuration import SolverSettings
from defecthom.services.discretization import BoxBackground, BoxOperators
from defecthom.services.fields import (
    FieldCalculusServiceContract,
    fit_power_law,
    whole_shell_reach,
)
from defecthom.services.linear_solver import LinearSolverServiceContract
from defecthom.services.notifications import NotificationsServiceContract

from .defect_service_contract import DECAY_OBJECTS, DefectServiceContract

MIN_HALF_WIDTH = 4
BOUNDARY_FRACTION = 1e-2
INNER_MASS_FRACTION = 0.99
CONTAMINATION_FRACTION = 0.1
FLUX_DIVERGENCE_CAP = 0.5
FLUX_CONSISTENCY_CONSTANT = 2.0
MIN_SHELLS = 3


def flux_consistency_fraction(h: float) -> float:
    """Relative O(h^2) slack of differenced fluxes; a unit-period mode loses sin^2(pi h)."""
    return min(FLUX_DIVERGENCE_CAP, FLUX_CONSISTENCY_CONSTANT * (math.pi * h) ** 2)


def reciprocal_exponent(reciprocal: float) -> float:
    """Exponent from its reciprocal; non-positive reciprocals mean no integrability constraint."""
    return 1.0 / reciprocal if reciprocal > 0.0 else math.inf


class DefectService(DefectServiceContract):
    """
    Second order finite differences on [-L, L]^d with zero boundary data.

    Periodic objects come from a CellSolution and are tiled onto the box with their
    spectral derivatives. The defect problems are posed for the perturbations only,
    so the right-hand sides vanish outside the defect and the Dirichlet truncation
    error is governed by the decay of the true perturbation.
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

    def decay_exponents(self, coefficients: CoefficientSet) -> DecayExponents:
        d = coefficients.d
        r = coefficients.r
        s = coefficients.s
        q = max(r, s)
        return DecayExponents(
            q_star=reciprocal_exponent(1.0 / q - 1.0 / d),
            q_prime=reciprocal_exponent(min(1.0 / r - 1.0 / d, 1.0 / s - 1.0 / d)),
            alpha=reciprocal_exponent(min(1.0 / r - 2.0 / d, 1.0 / s - 2.0 / d)),
        )

    def assemble_measure_rhs(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[Field]:
        background_result = self._background(coefficients, cell, grid)
        if not background_result.success or background_result.data is None:
            return background_result.as_fail()
        background = background_result.data
        operators = BoxOperators(grid)
        defect_part = operators.adjoint_matrix(background.a_tilde, background.b_tilde)
        rhs = -(defect_part @ operators.restrict(background.m_per))
        return OperationResult[Field].succeed(
            Field.scalar(grid, operators.extend(rhs), "m_tilde rhs")
        )

    def solve_invariant_defect(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[Field]:
        background_result = self._prepared_background(coefficients, cell, grid)
        if not background_result.success or background_result.data is None:
            return background_result.as_fail()
        background = background_result.data
        if not coefficients.has_defect:
            return OperationResult[Field].succeed(Field.zeros(grid, label="m_tilde"))

        operators = BoxOperators(grid)
        self._check_peclet(background, "m_tilde")
        matrix = operators.adjoint_matrix(background.a, background.b)
        rhs_result = self.assemble_measure_rhs(coefficients, cell, grid)
        if not rhs_result.success or rhs_result.data is None:
            return rhs_result
        rhs = operators.restrict(rhs_result.data.values)

        solve_result = self.linear_solver.solve_sparse(matrix, rhs, "m_tilde")
        if not solve_result.success or solve_result.data is None:
            return solve_result.with_context("measure perturbation").as_fail()
        values = operators.extend(solve_result.data.values)

        minimum = float(np.min(background.m_per + values))
        if minimum <= 0.0:
            message = (
                f"m_per + m_tilde has minimum {minimum:.3e} <= 0: discretization fault, "
                f"refine the box grid beyond n = {grid.n}"
            )
            self.notifications.error(message)
            return OperationResult[Field].fail(message, ResultCode.SOLVER_FAULT)
        self.notifications.info(
            f"m_tilde: max |m_tilde| {np.max(np.abs(values)):.3e}, min m {minimum:.6g}"
        )
        return OperationResult[Field].succeed(Field.scalar(grid, values, "m_tilde"))

    def solve_corrector_defect(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid, p: np.ndarray
    ) -> OperationResult[Field]:
        p = np.asarray(p, dtype=np.float64)
        if p.shape != (grid.d,):
            return OperationResult[Field].fail(
                f"direction {p.tolist()} does not have {grid.d} entries", ResultCode.USAGE
            )
        batch_result = self._solve_correctors(coefficients, cell, grid, [p])
        if not batch_result.success or batch_result.data is None:
            return batch_result.as_fail()
        return OperationResult[Field].succeed(batch_result.data[0])

    def solve_correctors_defect(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[tuple[Field, ...]]:
        batch_result = self._solve_correctors(coefficients, cell, grid, list(np.eye(grid.d)))
        if not batch_result.success or batch_result.data is None:
            return batch_result.as_fail()
        correctors = batch_result.data
        for corrector in correctors:
            self._check_contamination(corrector)
        return OperationResult[tuple[Field, ...]].succeed(tuple(correctors))

    def solve_B_defect(
        self, coefficients: CoefficientSet, cell: CellSolution, m_tilde: Field, grid: BoxGrid
    ) -> OperationResult[Field]:
        d = grid.d
        flux_result = self._defect_flux(coefficients, cell, m_tilde, grid)
        if not flux_result.success or flux_result.data is None:
            return flux_result.as_fail()
        flux = flux_result.data[0].values
        flux_scale = flux_result.data[1]
        if d == 1 or not np.any(flux):
            return OperationResult[Field].succeed(Field.zeros(grid, 2, "B_tilde"))

        operators = BoxOperators(grid)
        pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
        curls = np.stack(
            [
                operators.restrict(
                    operators.partial_nodes(flux[i], j) - operators.partial_nodes(flux[j], i)
                )
                for i, j in pairs
            ]
        )
        solve_result = self.linear_solver.solve_sparse(
            operators.dirichlet_laplacian(), curls, "B_tilde"
        )
        if not solve_result.success or solve_result.data is None:
            return solve_result.with_context("defect skew potential").as_fail()

        potential = np.zeros((d, d) + grid.shape)
        for index, (i, j) in enumerate(pairs):
            potential[i, j] = operators.extend(solve_result.data.values[index])
            potential[j, i] = -potential[i, j]
        B_tilde = Field.skew_part(grid, potential, "B_tilde")

        column_divergence = sum(operators.partial_nodes(B_tilde.values[i], i) for i in range(d))
        miss = np.abs(column_divergence - flux)
        inner = Region.ball(grid.L / 2.0).mask(grid)
        ring = grid.boundary_distance() == 1
        mismatch = float(np.max(miss[:, inner]))
        # the miss is discretely harmonic up to O(h^2), so the ring bounds the inner ball
        tolerance = float(np.max(miss[:, ring])) + flux_consistency_fraction(grid.h) * flux_scale
        if mismatch > tolerance:
            message = (
                f"B_tilde: column divergence misses the flux by {mismatch:.3e} on "
                f"|x| <= {grid.L / 2:g}, above {tolerance:.3e}"
            )
            self.notifications.error(message)
            return OperationResult[Field].fail(message, ResultCode.SOLVER_FAULT)
        self.notifications.info(
            f"B_tilde: column divergence misses the flux by {mismatch:.2e} on |x| <= {grid.L / 2:g}"
        )
        return OperationResult[Field].succeed(B_tilde)

    def solve_B_defect_convolution(
        self,
        coefficients: CoefficientSet,
        cell: CellSolution,
        m_tilde: Field,
        grid: BoxGrid,
        reference: Optional[Field] = None,
    ) -> OperationResult[tuple[Field, Optional[float]]]:
        result_type = tuple[Field, Optional[float]]
        if grid.d != 3:
            return OperationResult[result_type].fail(
                f"the Newtonian kernel route is implemented for d = 3, got d = {grid.d}",
                ResultCode.USAGE,
            )
        flux_result = self._defect_flux(coefficients, cell, m_tilde, grid)
        if not flux_result.success or flux_result.data is None:
            return flux_result.as_fail()
        potential_result = self.newtonian_skew_potential(flux_result.data[0])
        if not potential_result.success or potential_result.data is None:
            return potential_result.as_fail()
        potential = potential_result.data
        if reference is None:
            return OperationResult[result_type].succeed((potential, None))

        inner = Region.ball(grid.L / 2.0).mask(grid)
        difference = (potential - reference).magnitude()
        discrepancy = float(np.max(difference[inner]))
        tolerance = max(1e-4, 10.0 * grid.h)
        if discrepancy > tolerance:
            message = (
                f"convolution and Poisson skew potentials disagree by {discrepancy:.3e} on "
                f"|x| <= {grid.L / 2:g} (tolerance {tolerance:.1e}): truncation artifact"
            )
            self.notifications.error(message)
            return OperationResult[result_type].fail(message, ResultCode.CONTRACT_VIOLATION)
        self.notifications.info(f"B_tilde routes agree to {discrepancy:.2e}")
        return OperationResult[result_type].succeed((potential, discrepancy))

    def newtonian_skew_potential(self, flux: Field) -> OperationResult[Field]:
        grid = flux.grid
        if grid.d != 3 or flux.rank != 1 or not isinstance(grid, BoxGrid):
            return OperationResult[Field].fail(
                "the Newtonian skew potential needs a vector field on a d = 3 box",
                ResultCode.USAGE,
            )
        offsets = np.arange(-grid.n, grid.n + 1) * grid.h
        points = np.stack(np.meshgrid(offsets, offsets, offsets, indexing="ij"))
        distance = np.sqrt(np.sum(points**2, axis=0))
        with np.errstate(divide="ignore", invalid="ignore"):
            kernel = points / (4.0 * np.pi * distance**3)
        # the cell average of an odd kernel vanishes
        kernel[:, grid.n, grid.n, grid.n] = 0.0

        convolved = np.empty((3, 3) + grid.shape)
        for i in range(3):
            for j in range(3):
                convolved[i, j] = (
                    signal.fftconvolve(flux.values[j], kernel[i], mode="same") * grid.cell_volume
                )
        potential = convolved - np.swapaxes(convolved, 0, 1)
        return OperationResult[Field].succeed(Field.skew_part(grid, potential, "B_tilde"))

    def estimate_constant_probe(
        self,
        coefficients: CoefficientSet,
        grid: BoxGrid,
        q: float,
        rhs: list[tuple[str, Evaluator]],
    ) -> OperationResult[ProbeReport]:
        d = grid.d
        if not 1.0 <= q < d:
            return OperationResult[ProbeReport].fail(
                f"probe exponent must satisfy 1 <= q < d = {d}, got {q}", ResultCode.USAGE
            )
        if not rhs:
            return OperationResult[ProbeReport].fail(
                "no right-hand side to probe", ResultCode.USAGE
            )
        q_star = 1.0 / (1.0 / q - 1.0 / d)

        report = ProbeReport(q, q_star, [], [], [])
        for box in (grid, grid.doubled()):
            ratios_result = self._probe_ratios(coefficients, box, q, q_star, rhs)
            if not ratios_result.success or ratios_result.data is None:
                return ratios_result.as_fail()
            labels, ratios, skipped = ratios_result.data
            if box is grid:
                report.labels = labels
                report.ratios = ratios
                report.skipped = skipped
            else:
                report.ratios_doubled = ratios

        if not report.stable:
            self.notifications.warning(
                f"estimate constant grew by {report.growth:.2f} when the box doubled: "
                f"{coefficients.name} may violate the smallness hypotheses"
            )
        else:
            self.notifications.info(
                f"estimate constant {report.max_ratio:.4g} -> {report.max_ratio_doubled:.4g}"
            )
        return OperationResult[ProbeReport].succeed(report)

    def decay_report(self, solution: DefectSolution, which: str) -> OperationResult[DecayReport]:
        if which not in DECAY_OBJECTS:
            return OperationResult[DecayReport].fail(
                f'Unknown decay object "{which}", expected one of {", ".join(DECAY_OBJECTS)}',
                ResultCode.USAGE,
            )
        exponent = {
            "m_tilde": solution.exponents.q_prime,
            "grad_w_tilde": solution.exponents.q_star,
            "B_tilde": solution.exponents.alpha,
        }[which]
        reach = whole_shell_reach(solution.grid.L)

        sublinearity: list[float] = []
        if which == "grad_w_tilde":
            profiles: list[ShellProfile] = []
            for corrector in solution.w_tilde:
                gradient_result = self.field_calculus.differentiate(corrector, "grad")
                if not gradient_result.success or gradient_result.data is None:
                    return gradient_result.as_fail()
                profile_result = self.field_calculus.annular_profile(
                    gradient_result.data, exponent, max_radius=reach
                )
                if not profile_result.success or profile_result.data is None:
                    return profile_result.as_fail()
                profiles.append(profile_result.data)

                ratio_result = self.field_calculus.sublinearity_ratio(corrector, max_radius=reach)
                if not ratio_result.success or ratio_result.data is None:
                    return ratio_result.as_fail()
                values = ratio_result.data.values
                sublinearity = (
                    [max(old, new) for old, new in zip(sublinearity, values)]
                    if sublinearity
                    else list(values)
                )
            radii = profiles[0].radii
            norms = [max(profile.values[k] for profile in profiles) for k in range(len(radii))]
        else:
            target = solution.m_tilde if which == "m_tilde" else solution.B_tilde
            profile_result = self.field_calculus.annular_profile(target, exponent, max_radius=reach)
            if not profile_result.success or profile_result.data is None:
                return profile_result.as_fail()
            radii = profile_result.data.radii
            norms = profile_result.data.values

        if len(radii) < MIN_SHELLS:
            return OperationResult[DecayReport].fail(
                f"{which}: {len(radii)} dyadic shells fit in the box, at least {MIN_SHELLS} "
                "are needed for a rate",
                ResultCode.USAGE,
            )
        rate, residual = fit_power_law(radii, norms)
        decreasing = None
        if sublinearity:
            pairs = zip(sublinearity, sublinearity[1:])
            decreasing = all(later <= earlier * (1.0 + 1e-9) for earlier, later in pairs)
        report = DecayReport(
            which=which,
            exponent=exponent,
            shells=list(radii),
            norms=list(norms),
            fitted_rate=rate,
            fit_residual=residual,
            sublinearity=sublinearity,
            sublinearity_decreasing=decreasing,
        )
        return OperationResult[DecayReport].succeed(report)

    def truncation_consistency(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[float]:
        doubled = grid.doubled()
        small_result = self.solve_correctors_defect(coefficients, cell, grid)
        if not small_result.success or small_result.data is None:
            return small_result.as_fail()
        large_result = self.solve_correctors_defect(coefficients, cell, doubled)
        if not large_result.success or large_result.data is None:
            return large_result.as_fail()

        offset = grid.n // 2
        window = (slice(None),) + (slice(offset, offset + grid.n + 1),) * grid.d
        inner = Region.ball(grid.L / 2.0).mask(grid)
        worst = 0.0
        for small, large in zip(small_result.data, large_result.data):
            small_gradient = self.field_calculus.differentiate(small, "grad")
            large_gradient = self.field_calculus.differentiate(large, "grad")
            if not small_gradient.success or small_gradient.data is None:
                return small_gradient.as_fail()
            if not large_gradient.success or large_gradient.data is None:
                return large_gradient.as_fail()
            reference = small_gradient.data.values[:, inner]
            difference = reference - large_gradient.data.values[window][:, inner]
            scale = float(np.sqrt(np.sum(reference**2)))
            if scale > 0.0:
                worst = max(worst, float(np.sqrt(np.sum(difference**2))) / scale)
        self.notifications.info(
            f"grad w_tilde changes by {worst:.3e} on |x| <= {grid.L / 2:g} when L doubles"
        )
        return OperationResult[float].succeed(worst)

    def decay_stability(
        self, coefficients: CoefficientSet, cell: CellSolution, solution: DefectSolution
    ) -> OperationResult[dict[str, float]]:
        doubled_result = self.solve_all(coefficients, cell, solution.grid.doubled())
        if not doubled_result.success or doubled_result.data is None:
            return doubled_result.with_context("doubled box").as_fail()

        changes: dict[str, float] = {}
        for which, report in solution.decay.items():
            doubled = doubled_result.data.decay.get(which)
            if report.fitted_rate is None or doubled is None or doubled.fitted_rate is None:
                continue
            scale = abs(report.fitted_rate)
            difference = abs(doubled.fitted_rate - report.fitted_rate)
            changes[which] = difference / scale if scale > 0.0 else math.inf
            self.notifications.info(
                f"{which}: fitted rate {report.fitted_rate:.3f} on L = {solution.grid.L:g}, "
                f"{doubled.fitted_rate:.3f} on L = {2 * solution.grid.L:g}"
            )
        return OperationResult[dict[str, float]].succeed(changes)

    def solve_all(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[DefectSolution]:
        measure_result = self.solve_invariant_defect(coefficients, cell, grid)
        if not measure_result.success or measure_result.data is None:
            return measure_result.as_fail()
        m_tilde = measure_result.data

        correctors_result = self.solve_correctors_defect(coefficients, cell, grid)
        if not correctors_result.success or correctors_result.data is None:
            return correctors_result.as_fail()
        correctors = correctors_result.data

        B_result = self.solve_B_defect(coefficients, cell, m_tilde, grid)
        if not B_result.success or B_result.data is None:
            return B_result.as_fail()

        residuals = self._residuals(coefficients, cell, grid, m_tilde, correctors)
        solution = DefectSolution(
            grid=grid,
            m_tilde=m_tilde,
            w_tilde=correctors,
            B_tilde=B_result.data,
            exponents=self.decay_exponents(coefficients),
            residuals=residuals,
        )
        for which in DECAY_OBJECTS:
            report_result = self.decay_report(solution, which)
            if report_result.success and report_result.data is not None:
                solution.decay[which] = report_result.data
            else:
                self.notifications.warning(f"no decay report: {report_result.message}")
        self.notifications.success(
            f"defect problems solved on [-{grid.L}, {grid.L}]^{grid.d} with n = {grid.n}"
        )
        return OperationResult[DefectSolution].succeed(solution)

    def _background(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[BoxBackground]:
        try:
            return OperationResult[BoxBackground].succeed(BoxBackground(coefficients, cell, grid))
        except ValueError as error:
            return OperationResult[BoxBackground].fail(str(error), ResultCode.USAGE)

    def _prepared_background(
        self, coefficients: CoefficientSet, cell: CellSolution, grid: BoxGrid
    ) -> OperationResult[BoxBackground]:
        """Background samples once the box is large enough to contain the defect."""
        background_result = self._background(coefficients, cell, grid)
        if not background_result.success or background_result.data is None:
            return background_result
        background = background_result.data
        if grid.L < MIN_HALF_WIDTH:
            return OperationResult[BoxBackground].fail(
                f"box half-width L = {grid.L} is below {MIN_HALF_WIDTH} periods",
                ResultCode.PRECONDITION,
            )
        magnitude = np.sqrt(np.sum(background.a_tilde**2, axis=(0, 1))) + np.sqrt(
            np.sum(background.b_tilde**2, axis=0)
        )
        peak = float(np.max(magnitude))
        if peak == 0.0:
            return background_result

        on_boundary = float(np.max(magnitude[grid.boundary_distance() == 0]))
        if on_boundary > BOUNDARY_FRACTION * peak:
            message = (
                f"defect of {coefficients.name} reaches the box boundary at "
                f"{on_boundary / peak:.1%} of its peak: enlarge L beyond {grid.L}"
            )
            self.notifications.error(message)
            return OperationResult[BoxBackground].fail(message, ResultCode.PRECONDITION)
        inner = Region.ball(grid.L / 4.0).mask(grid)
        share = float(np.sum(magnitude[inner]) / np.sum(magnitude))
        if share < INNER_MASS_FRACTION:
            self.notifications.warning(
                f"only {share:.1%} of the defect lies in |x| <= L/4 = {grid.L / 4:g}"
            )
        return background_result

    def _solve_correctors(
        self,
        coefficients: CoefficientSet,
        cell: CellSolution,
        grid: BoxGrid,
        directions: list[np.ndarray],
    ) -> OperationResult[list[Field]]:
        background_result = self._prepared_background(coefficients, cell, grid)
        if not background_result.success or background_result.data is None:
            return background_result.as_fail()
        background = background_result.data
        labels = [f"w_tilde p={p.tolist()}" for p in directions]
        if not coefficients.has_defect:
            return OperationResult[list[Field]].succeed(
                [Field.zeros(grid, label=label) for label in labels]
            )

        operators = BoxOperators(grid)
        self._check_peclet(background, "w_tilde")
        matrix = operators.nondivergence_matrix(background.a, background.b)
        rhs = np.stack([operators.restrict(background.corrector_rhs(p)) for p in directions])
        solve_result = self.linear_solver.solve_sparse(matrix, rhs, "w_tilde")
        if not solve_result.success or solve_result.data is None:
            return solve_result.with_context("corrector perturbation").as_fail()
        return OperationResult[list[Field]].succeed(
            [
                Field.scalar(grid, operators.extend(values), label)
                for values, label in zip(solve_result.data.values, labels)
            ]
        )

    def _defect_flux(
        self, coefficients: CoefficientSet, cell: CellSolution, m_tilde: Field, grid: BoxGrid
    ) -> OperationResult[tuple[Field, float]]:
        """F_j = m~ b_per,j + m b~_j + d_i (m~ a_per,ij + m a~_ij) with m = m_per + m~.

        Returns the flux with the size of its largest separate term.
        """
        if m_tilde.grid != grid:
            return OperationResult[tuple[Field, float]].fail(
                "m_tilde lives on a different box", ResultCode.USAGE
            )
        background_result = self._background(coefficients, cell, grid)
        if not background_result.success or background_result.data is None:
            return background_result.as_fail()
        background = background_result.data
        operators = BoxOperators(grid)
        d = grid.d
        perturbation = m_tilde.values
        m = background.m_per + perturbation
        parts = [perturbation * background.b_per, m * background.b_tilde]
        for i in range(d):
            parts.append(
                operators.partial_nodes(
                    perturbation * background.a_per[i] + m * background.a_tilde[i], i
                )
            )
        flux = sum(parts)

        divergence = sum(operators.partial_nodes(flux[j], j) for j in range(d))
        # measured on the separate terms; the total flux may vanish identically
        gradient_scale = max(
            float(np.max(np.abs(operators.partial_nodes(part[j], i))))
            for part in parts
            for i in range(d)
            for j in range(d)
        )
        away = grid.boundary_distance() >= 2
        worst = float(np.max(np.abs(divergence[away])))
        tolerance = flux_consistency_fraction(grid.h) * gradient_scale
        if gradient_scale > 0.0 and worst > tolerance:
            message = (
                f"defect flux has divergence {worst:.3e} against derivatives of size "
                f"{gradient_scale:.3e}, above {tolerance:.3e}: upstream m_tilde fault"
            )
            self.notifications.error(message)
            return OperationResult[tuple[Field, float]].fail(message, ResultCode.SOLVER_FAULT)
        flux_scale = max(float(np.max(np.abs(part))) for part in parts)
        return OperationResult[tuple[Field, float]].succeed(
            (Field.vector(grid, flux, "defect flux"), flux_scale)
        )

    def _probe_ratios(
        self,
        coefficients: CoefficientSet,
        grid: BoxGrid,
        q: float,
        q_star: float,
        rhs: list[tuple[str, Evaluator]],
    ) -> OperationResult[tuple[list[str], list[float], list[str]]]:
        result_type = tuple[list[str], list[float], list[str]]
        operators = BoxOperators(grid)
        matrix = operators.nondivergence_matrix(
            coefficients.sample_a(grid).values, coefficients.sample_b(grid).values
        )
        coordinates = grid.coordinates()
        labels: list[str] = []
        data: list[Field] = []
        skipped: list[str] = []
        for label, evaluator in rhs:
            values = np.broadcast_to(evaluator(coordinates), grid.shape)
            if not np.any(values):
                skipped.append(label)
                continue
            labels.append(label)
            data.append(Field.scalar(grid, values, label))
        if not data:
            return OperationResult[result_type].fail(
                "every probe right-hand side vanishes", ResultCode.USAGE
            )

        columns = np.stack([operators.restrict(f.values) for f in data])
        solve_result = self.linear_solver.solve_sparse(matrix, columns, "probe")
        if not solve_result.success or solve_result.data is None:
            return solve_result.with_context("estimate probe").as_fail()

        ratios: list[float] = []
        for f, values in zip(data, solve_result.data.values):
            u = Field.scalar(grid, operators.extend(values), f.label)
            gradient = self.field_calculus.differentiate(u, "grad")
            hessian = self.field_calculus.differentiate(u, "hess")
            if not gradient.success or gradient.data is None:
                return gradient.as_fail()
            if not hessian.success or hessian.data is None:
                return hessian.as_fail()
            norms = [
                self.field_calculus.lq_norm(hessian.data, [q_star]),
                self.field_calculus.lq_norm(gradient.data, [q_star]),
                self.field_calculus.lq_norm(f, [q, q_star]),
            ]
            for norm in norms:
                if not norm.success or norm.data is None:
                    return norm.as_fail()
            ratios.append((norms[0].data + norms[1].data) / norms[2].data)
        return OperationResult[result_type].succeed((labels, ratios, skipped))

    def _residuals(
        self,
        coefficients: CoefficientSet,
        cell: CellSolution,
        grid: BoxGrid,
        m_tilde: Field,
        correctors: tuple[Field, ...],
    ) -> dict[str, float]:
        background = BoxBackground(coefficients, cell, grid)
        operators = BoxOperators(grid)
        matrix = operators.adjoint_matrix(background.a, background.b)
        rhs = -(
            operators.adjoint_matrix(background.a_tilde, background.b_tilde)
            @ operators.restrict(background.m_per)
        )
        residuals = {
            "m_tilde": float(
                np.max(np.abs(matrix @ operators.restrict(m_tilde.values) - rhs), initial=0.0)
            )
        }
        for index, corrector in enumerate(correctors):
            applied = operators.nondivergence_nodes(background.a, background.b, corrector.values)
            target = background.corrector_rhs(np.eye(grid.d)[index])
            mismatch = operators.restrict(applied) - operators.restrict(target)
            residuals[f"w_tilde_{index}"] = float(np.max(np.abs(mismatch)))
        return residuals

    def _check_contamination(self, corrector: Field):
        gradient_result = self.field_calculus.differentiate(corrector, "grad")
        if not gradient_result.success or gradient_result.data is None:
            return
        profile_result = self.field_calculus.annular_profile(
            gradient_result.data, math.inf, max_radius=whole_shell_reach(corrector.grid.L)
        )
        if not profile_result.success or profile_result.data is None:
            return
        values = profile_result.data.values
        if values and values[0] > 0.0 and values[-1] > CONTAMINATION_FRACTION * values[0]:
            self.notifications.warning(
                f"{corrector.label}: |grad w_tilde| on the outermost shell is "
                f"{values[-1] / values[0]:.1%} of the innermost, the Dirichlet boundary "
                "contaminates the solution"
            )

    def _check_peclet(self, background: BoxBackground, label: str):
        a = background.a
        ellipticity = float(np.min(np.linalg.eigvalsh(np.moveaxis(a, (0, 1), (-2, -1)))))
        peclet = (
            float(np.max(np.sqrt(np.sum(background.b**2, axis=0))))
            * background.grid.h
            / (2.0 * ellipticity)
        )
        if peclet >= 1.0:
            self.notifications.warning(
                f"{label}: cell Peclet number {peclet:.2f} >= 1, refine the box grid"
            )
