"""Necessary imports to implement the Coefficient Catalog Service"""

from typing import Any, Optional

import numpy as np

from defecthom.models import (
    BoxGrid,
    CoefficientSet,
    Evaluator,
    Field,
    OperationResult,
    ResultCode,
    ValidationReport,
)
from defecthom.services.fields import FieldCalculusServiceContract, fit_power_law
from defecthom.services.notifications import NotificationsServiceContract

from .coefficient_catalog_service_contract import CoefficientCatalogServiceContract
from .families import (
    AlgebraicDecayFamily,
    CoefficientFamily,
    ConstantDriftFamily,
    CustomFamily,
    GaussianBumpFamily,
    GradientDefectFamily,
    IdentityFamily,
    ShearFamily,
    SinDriftFamily,
)

MIN_NODES_PER_PERIOD = 16


class CoefficientCatalogService(CoefficientCatalogServiceContract):
    """Coefficient catalog backed by the closed-form families."""

    def __init__(
        self,
        notifications: NotificationsServiceContract,
        field_calculus: FieldCalculusServiceContract,
        families: Optional[list[CoefficientFamily]] = None,
    ):
        self.notifications = notifications
        self.field_calculus = field_calculus
        catalog = families or [
            IdentityFamily(),
            SinDriftFamily(),
            ConstantDriftFamily(),
            ShearFamily(),
            GaussianBumpFamily(),
            AlgebraicDecayFamily(),
            GradientDefectFamily(),
            CustomFamily(),
        ]
        self._families = {family.name: family for family in catalog}

    def families(self) -> list[str]:
        return list(self._families)

    def is_counterexample(self, name: str, params: dict[str, Any]) -> bool:
        build_result = self.build_family(name, params)
        if not build_result.success or build_result.data is None:
            return False
        return build_result.data.counterexample

    def build_family(self, name: str, params: dict[str, Any]) -> OperationResult[CoefficientSet]:
        family = self._families.get(name)
        if family is None:
            return OperationResult[CoefficientSet].fail(
                f'Unknown coefficient family "{name}"; known: {", ".join(self._families)}',
                ResultCode.USAGE,
            )
        try:
            coefficients = family.build(params)
        except (KeyError, TypeError, ValueError) as error:
            return OperationResult[CoefficientSet].fail(
                f'Invalid parameters for "{name}": {error}', ResultCode.USAGE
            )
        return OperationResult[CoefficientSet].succeed(coefficients)

    def validate(
        self, coefficients: CoefficientSet, probe_grid: BoxGrid
    ) -> OperationResult[ValidationReport]:
        if probe_grid.d != coefficients.d:
            return OperationResult[ValidationReport].fail(
                f"probe grid dimension {probe_grid.d} differs from d = {coefficients.d}",
                ResultCode.USAGE,
            )
        if probe_grid.nodes_per_period < MIN_NODES_PER_PERIOD:
            return OperationResult[ValidationReport].fail(
                f"probe grid has {probe_grid.nodes_per_period} nodes per period, "
                f"at least {MIN_NODES_PER_PERIOD} are needed",
                ResultCode.USAGE,
            )

        flags: list[str] = []
        notes: list[str] = []
        points = probe_grid.coordinates()

        raw = {}
        for label, evaluator, rank in (
            ("a_per", coefficients.a_per, 2),
            ("a_tilde", coefficients.a_tilde, 2),
            ("b_per", coefficients.b_per, 1),
            ("b_tilde", coefficients.b_tilde, 1),
        ):
            raw[label] = self._raw_sample(evaluator, points, rank, coefficients.d)
            if not np.all(np.isfinite(raw[label])):
                flags.append(f"{label} is not bounded on the probe grid")
                raw[label] = np.nan_to_num(raw[label], nan=0.0, posinf=0.0, neginf=0.0)

        for label in ("a_per", "a_tilde"):
            if not np.allclose(raw[label], np.swapaxes(raw[label], 0, 1), rtol=0.0, atol=1e-14):
                flags.append(f"{label} is not symmetric")

        full = raw["a_per"] + raw["a_tilde"]
        eigenvalues = self._eigenvalues(full)
        background = self._eigenvalues(raw["a_per"])
        lambda_est = float(min(np.min(eigenvalues), np.min(background)))
        Lambda_est = float(max(np.max(eigenvalues), np.max(background)))
        if lambda_est <= 0.0:
            flags.append(
                f"a is not uniformly elliptic: smallest eigenvalue {lambda_est:.3g} "
                "on the probe grid"
            )

        decay_fit_a = None
        decay_fit_b = None
        if not coefficients.has_defect:
            notes.append("no defect part: decay checks skipped")
        else:
            if coefficients.has_a_defect:
                decay_fit_a = self._decay_check(
                    "a_tilde", raw["a_tilde"], coefficients.r, "r", probe_grid, flags, notes
                )
            if coefficients.has_b_defect:
                decay_fit_b = self._decay_check(
                    "b_tilde", raw["b_tilde"], coefficients.s, "s", probe_grid, flags, notes
                )
            if coefficients.outside_hypothesis:
                notes.append(
                    f"d = {coefficients.d} lies outside the standing hypothesis d >= 3 with "
                    "1 <= r, s < d; the family serves as a closed-form oracle and the "
                    "exponent range check is skipped"
                )
            else:
                for label, exponent in (("r", coefficients.r), ("s", coefficients.s)):
                    if not 1.0 <= exponent < coefficients.d:
                        flags.append(
                            f"{label} = {exponent:g} outside [1, d = {coefficients.d}) violates "
                            "the decay hypothesis of the defect estimates"
                        )

        if coefficients.counterexample:
            notes.append("family is marked as a counterexample: flags are expected")

        report = ValidationReport(lambda_est, Lambda_est, decay_fit_a, decay_fit_b, flags, notes)
        for flag in flags:
            self.notifications.warning(f"{coefficients.name}: {flag}")
        return OperationResult[ValidationReport].succeed(report)

    def _eigenvalues(self, matrix: np.ndarray) -> np.ndarray:
        symmetric = 0.5 * (matrix + np.swapaxes(matrix, 0, 1))
        return np.linalg.eigvalsh(np.moveaxis(symmetric, (0, 1), (-2, -1)))

    def _raw_sample(
        self, evaluator: Optional[Evaluator], points: np.ndarray, rank: int, d: int
    ) -> np.ndarray:
        shape = (d,) * rank + points.shape[1:]
        if evaluator is None:
            return np.zeros(shape)
        with np.errstate(all="ignore"):
            return np.array(np.broadcast_to(evaluator(points), shape), dtype=np.float64)

    def _decay_check(
        self,
        label: str,
        values: np.ndarray,
        exponent: float,
        exponent_name: str,
        grid: BoxGrid,
        flags: list[str],
        notes: list[str],
    ) -> Optional[float]:
        rank = values.ndim - grid.d
        magnitude = np.sqrt(np.sum(values**2, axis=tuple(range(rank)))) if rank else np.abs(values)
        # shells fully inside the box
        profile_result = self.field_calculus.annular_profile(
            Field.scalar(grid, magnitude, label), exponent, max_radius=grid.L
        )
        if not profile_result.success or profile_result.data is None:
            notes.append(f"{label}: {profile_result.message}")
            return None

        profile = profile_result.data
        slope, _ = fit_power_law(profile.radii, profile.values)
        if slope is None:
            notes.append(f"{label}: shell norms vanish beyond the first shell (fast decay)")
            return None
        margin = -slope
        if margin < 0.0:
            flags.append(
                f"{label} does not look L^{exponent_name} with {exponent_name} = {exponent:g}: "
                f"shell norms grow like R^{slope:.2f}"
            )
        return slope
