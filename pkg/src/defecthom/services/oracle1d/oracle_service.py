"""Necessary imports to implement the Oracle Service"""

from typing import Optional

import numpy as np

from defecthom.models import (
    CoefficientSet,
    DefectCorrectorOracle,
    Field,
    Grid,
    GradientDefectMeasure,
    OneDProfile,
    OperationResult,
    ResultCode,
)
from defecthom.models.oracle import ScalarFunction

from .oracle_service_contract import OracleServiceContract
from .quadrature import cell_average, cumulative_integral, half_line_integral

DRIFT_TOLERANCE = 1e-12
ZERO_INTEGRAL_TOLERANCE = 1e-10


class OracleService(OracleServiceContract):
    """
    Integrating-factor solutions of -w'' + b (1 + w') = 0 and -(m' + b m)' = 0 on the line.

    With a = 1 every closed form is a product of exponentials of antiderivatives of b,
    so the only numerical ingredient is quadrature. These problems live outside the
    d >= 3 setting of the defect estimates and serve purely as ground truth.
    """

    def profile(
        self, b_per: ScalarFunction, b_tilde: Optional[ScalarFunction] = None
    ) -> OperationResult[OneDProfile]:
        drift = cell_average(b_per)
        if abs(drift) > DRIFT_TOLERANCE:
            return OperationResult[OneDProfile].fail(
                f"zero-drift condition violated: <b_per> = {drift:.6g}, "
                "no periodic corrector exists",
                ResultCode.PRECONDITION,
            )

        def B_per(x: np.ndarray) -> np.ndarray:
            return cumulative_integral(b_per, np.mod(x, 1.0))

        plus = cell_average(lambda x: np.exp(B_per(x)))
        minus = cell_average(lambda x: np.exp(-B_per(x)))
        B_tilde = None
        if b_tilde is not None:
            B_tilde = self._defect_antiderivative(b_tilde)[0]
        return OperationResult[OneDProfile].succeed(
            OneDProfile(b_per, B_per, plus, minus, b_tilde, B_tilde)
        )

    def periodic_corrector_1d(self, b_per: ScalarFunction) -> OperationResult[ScalarFunction]:
        profile_result = self.profile(b_per)
        if not profile_result.success or profile_result.data is None:
            return profile_result.as_fail()
        profile = profile_result.data

        def derivative(x: np.ndarray) -> np.ndarray:
            return -1.0 + np.exp(profile.B_per(x)) / profile.normalization_plus

        return OperationResult[ScalarFunction].succeed(derivative)

    def periodic_measure_1d(self, b_per: ScalarFunction) -> OperationResult[ScalarFunction]:
        profile_result = self.profile(b_per)
        if not profile_result.success or profile_result.data is None:
            return profile_result.as_fail()
        profile = profile_result.data

        def measure(x: np.ndarray) -> np.ndarray:
            return np.exp(-profile.B_per(x)) / profile.normalization_minus

        return OperationResult[ScalarFunction].succeed(measure)

    def defect_corrector_1d(
        self, b_per: ScalarFunction, b_tilde: ScalarFunction
    ) -> OperationResult[DefectCorrectorOracle]:
        profile_result = self.profile(b_per)
        if not profile_result.success or profile_result.data is None:
            return profile_result.as_fail()
        profile = profile_result.data
        B_tilde, left, right, anchored, converged = self._defect_antiderivative(b_tilde)

        def derivative(x: np.ndarray) -> np.ndarray:
            with np.errstate(over="ignore"):
                factor = np.exp(profile.B_per(x)) / profile.normalization_plus
                return factor * np.expm1(-B_tilde(x))

        sublinear = converged and abs(left + right) <= ZERO_INTEGRAL_TOLERANCE * max(
            1.0, abs(left) + abs(right)
        )
        oracle = DefectCorrectorOracle(
            derivative=derivative,
            B_tilde=B_tilde,
            sublinear=sublinear,
            left_integral=left if anchored else float("inf"),
            right_integral=right if converged else float("inf"),
            anchored_at_minus_infinity=anchored,
        )
        return OperationResult[DefectCorrectorOracle].succeed(oracle)

    def defect_measure_1d(
        self, b_per: ScalarFunction, b_tilde: ScalarFunction
    ) -> OperationResult[ScalarFunction]:
        measure_result = self.periodic_measure_1d(b_per)
        if not measure_result.success or measure_result.data is None:
            return measure_result
        m_per = measure_result.data
        B_tilde, _, _, anchored, _ = self._defect_antiderivative(b_tilde)
        if not anchored:
            return OperationResult[ScalarFunction].fail(
                "drift defect is not integrable on (-inf, 0]: the measure perturbation "
                "has no decaying normalization",
                ResultCode.PRECONDITION,
            )

        def m_tilde(x: np.ndarray) -> np.ndarray:
            return m_per(x) * np.expm1(B_tilde(x))

        return OperationResult[ScalarFunction].succeed(m_tilde)

    def gradient_defect_measure(
        self, psi_tilde: ScalarFunction, d: int
    ) -> OperationResult[GradientDefectMeasure]:
        if d not in (1, 2, 3):
            return OperationResult[GradientDefectMeasure].fail(
                f"dimension must be 1, 2 or 3, got {d}", ResultCode.USAGE
            )

        def m(points: np.ndarray) -> np.ndarray:
            return np.exp(-psi_tilde(points))

        def m_tilde(points: np.ndarray) -> np.ndarray:
            return np.expm1(-psi_tilde(points))

        return OperationResult[GradientDefectMeasure].succeed(GradientDefectMeasure(m, m_tilde))

    def coefficient_functions(
        self, coefficients: CoefficientSet
    ) -> OperationResult[tuple[ScalarFunction, Optional[ScalarFunction]]]:
        result_type = tuple[ScalarFunction, Optional[ScalarFunction]]
        if coefficients.d != 1:
            return OperationResult[result_type].fail(
                f"closed forms are one dimensional, {coefficients.name} has d = {coefficients.d}",
                ResultCode.USAGE,
            )
        probe = np.linspace(-2.0, 2.0, 65)[None]
        a = coefficients.a_per(probe)
        if coefficients.has_a_defect:
            a = a + coefficients.a_tilde(probe)
        if not np.allclose(a, 1.0, rtol=0.0, atol=1e-14):
            return OperationResult[result_type].fail(
                f"closed forms need a = 1, {coefficients.name} has a varying diffusion",
                ResultCode.USAGE,
            )

        def b_per(x: np.ndarray) -> np.ndarray:
            return coefficients.b_per(np.asarray(x, dtype=np.float64)[None])[0]

        b_tilde = None
        if coefficients.b_tilde is not None:
            evaluator = coefficients.b_tilde

            def b_tilde(x: np.ndarray) -> np.ndarray:
                return evaluator(np.asarray(x, dtype=np.float64)[None])[0]

        return OperationResult[result_type].succeed((b_per, b_tilde))

    def sample(self, function: ScalarFunction, grid: Grid, label: str) -> OperationResult[Field]:
        if grid.d != 1:
            return OperationResult[Field].fail(
                f"one dimensional closed forms cannot be sampled on a d = {grid.d} grid",
                ResultCode.USAGE,
            )
        with np.errstate(over="ignore", invalid="ignore"):
            values = np.asarray(function(grid.axis()), dtype=np.float64)
        if not np.all(np.isfinite(values)):
            return OperationResult[Field].fail(
                f"{label} overflows on the grid", ResultCode.NUMERIC_FAULT
            )
        return OperationResult[Field].succeed(Field.scalar(grid, values, label))

    def _defect_antiderivative(
        self, b_tilde: ScalarFunction
    ) -> tuple[ScalarFunction, float, float, bool, bool]:
        """B_tilde with B_tilde' = -b_tilde, anchored at -inf when the left integral converges."""
        left, anchored = half_line_integral(b_tilde, -1.0)
        right, converged = half_line_integral(b_tilde, 1.0)
        offset = left if anchored else 0.0

        def B_tilde(x: np.ndarray) -> np.ndarray:
            return -(offset + cumulative_integral(b_tilde, x))

        return B_tilde, left, right, anchored, converged and anchored
