"""Necessary imports to implement the Field Calculus Service"""

import math

import numpy as np

from defecthom.models import (
    Field,
    NodeGrid,
    OperationResult,
    Region,
    ResultCode,
    ShellProfile,
    TorusGrid,
)
from defecthom.services.discretization import SpectralOperators

from .field_calculus_service_contract import DERIVATIVE_KINDS, FieldCalculusServiceContract
from .shells import dyadic_radii


class FieldCalculusService(FieldCalculusServiceContract):
    """Spectral calculus on the torus, second order differences on boxes."""

    def differentiate(self, f: Field, kind: str) -> OperationResult[Field]:
        if kind not in DERIVATIVE_KINDS:
            return OperationResult[Field].fail(
                f'Unknown derivative "{kind}", expected one of {", ".join(DERIVATIVE_KINDS)}',
                ResultCode.USAGE,
            )
        if kind in ("grad", "hess") and f.rank != 0:
            return OperationResult[Field].fail(
                f"{kind} needs a rank 0 field, got rank {f.rank}", ResultCode.USAGE
            )
        if kind == "div" and f.rank == 0:
            return OperationResult[Field].fail(
                "div needs a rank 1 or rank 2 field, got rank 0", ResultCode.USAGE
            )

        with np.errstate(over="ignore", invalid="ignore"):
            if isinstance(f.grid, TorusGrid):
                values = self._spectral(f, kind)
            else:
                values = self._finite_difference(f, kind)

        if not np.all(np.isfinite(values)):
            return OperationResult[Field].fail(
                f"{kind} of {f.label or 'field'} is not finite", ResultCode.NUMERIC_FAULT
            )
        label = f"{kind}({f.label})" if f.label else kind
        if kind == "grad":
            return OperationResult[Field].succeed(Field.vector(f.grid, values, label))
        if kind == "hess":
            return OperationResult[Field].succeed(Field.symmetrized(f.grid, values, label))
        rank = 0 if f.rank == 1 else 1
        return OperationResult[Field].succeed(Field(f.grid, rank, values, label=label))

    def mean(self, f: Field) -> OperationResult[float | np.ndarray]:
        if not isinstance(f.grid, TorusGrid):
            return OperationResult[float | np.ndarray].fail(
                "cell averages are defined on torus grids only", ResultCode.USAGE
            )
        axes = tuple(range(f.rank, f.rank + f.grid.d))
        average = np.sum(f.values, axis=axes) * f.grid.cell_volume
        if np.ndim(average) == 0:
            return OperationResult[float | np.ndarray].succeed(float(average))
        return OperationResult[float | np.ndarray].succeed(average)

    def lq_norm(
        self, f: Field, exponents: list[float], region: Region | None = None
    ) -> OperationResult[float]:
        if not exponents:
            return OperationResult[float].fail("no exponent given", ResultCode.USAGE)
        for q in exponents:
            if not q >= 1.0:
                return OperationResult[float].fail(
                    f"exponent {q} is outside [1, inf]", ResultCode.USAGE
                )
        region = region or Region.whole()
        mask = region.mask(f.grid)
        if not np.any(mask):
            return OperationResult[float].fail(
                f"{region.describe()} contains no grid nodes", ResultCode.USAGE
            )

        magnitude = f.magnitude()[mask]
        total = sum(self._single_norm(magnitude, q, f.grid.cell_volume) for q in exponents)
        if not math.isfinite(total):
            return OperationResult[float].fail("norm is not finite", ResultCode.NUMERIC_FAULT)
        return OperationResult[float].succeed(total)

    def annular_profile(
        self, f: Field, q: float, max_radius: float | None = None
    ) -> OperationResult[ShellProfile]:
        radii_result = self._shell_radii(f, max_radius)
        if not radii_result.success or radii_result.data is None:
            return radii_result.as_fail()

        radius = f.grid.radius()
        magnitude = f.magnitude()
        profile = ShellProfile([], [])
        for inner in radii_result.data:
            mask = (radius >= inner) & (radius < 2.0 * inner)
            if not np.any(mask):
                profile.skipped.append(inner)
                continue
            profile.radii.append(inner)
            profile.values.append(self._single_norm(magnitude[mask], q, f.grid.cell_volume))
        return OperationResult[ShellProfile].succeed(profile)

    def sublinearity_ratio(
        self, w: Field, max_radius: float | None = None
    ) -> OperationResult[ShellProfile]:
        if w.rank != 0:
            return OperationResult[ShellProfile].fail(
                f"sublinearity is measured on rank 0 fields, got rank {w.rank}", ResultCode.USAGE
            )
        radii_result = self._shell_radii(w, max_radius)
        if not radii_result.success or radii_result.data is None:
            return radii_result.as_fail()

        radius = w.grid.radius()
        ratio = np.abs(w.values) / (1.0 + radius)
        profile = ShellProfile([], [])
        for inner in radii_result.data:
            mask = (radius >= inner) & (radius < 2.0 * inner)
            if not np.any(mask):
                profile.skipped.append(inner)
                continue
            profile.radii.append(inner)
            profile.values.append(float(np.max(ratio[mask])))
        return OperationResult[ShellProfile].succeed(profile)

    def _shell_radii(self, f: Field, max_radius: float | None) -> OperationResult[list[float]]:
        if not isinstance(f.grid, NodeGrid):
            return OperationResult[list[float]].fail(
                "shell profiles are defined on box grids only", ResultCode.USAGE
            )
        _, upper = f.grid.bounds()
        reach = upper * math.sqrt(f.grid.d) if max_radius is None else max_radius
        radii = dyadic_radii(reach)
        if len(radii) < 2:
            return OperationResult[list[float]].fail(
                f"box half-width {upper:g} leaves fewer than two dyadic shells", ResultCode.USAGE
            )
        return OperationResult[list[float]].succeed(radii)

    def _single_norm(self, magnitude: np.ndarray, q: float, volume: float) -> float:
        if math.isinf(q):
            return float(np.max(magnitude)) if magnitude.size else 0.0
        peak = float(np.max(magnitude)) if magnitude.size else 0.0
        if peak == 0.0:
            return 0.0
        scaled = magnitude / peak
        return peak * float(volume * np.sum(scaled**q)) ** (1.0 / q)

    def _spectral(self, f: Field, kind: str) -> np.ndarray:
        operators = SpectralOperators(f.grid)
        if kind == "grad":
            return operators.gradient(f.values)
        if kind == "hess":
            return operators.hessian(f.values)
        return operators.divergence(f.values)

    def _finite_difference(self, f: Field, kind: str) -> np.ndarray:
        d = f.grid.d
        h = f.grid.h
        if kind == "grad":
            return np.stack([self._first(f.values, axis, h) for axis in range(d)])
        if kind == "hess":
            hessian = np.empty((d, d) + f.grid.shape)
            for i in range(d):
                hessian[i, i] = self._second(f.values, i, h)
                for j in range(i + 1, d):
                    hessian[i, j] = self._first(self._first(f.values, j, h), i, h)
                    hessian[j, i] = hessian[i, j]
            return hessian
        if f.rank == 1:
            return sum(self._first(f.values[j], j, h) for j in range(d))
        return np.stack(
            [sum(self._first(f.values[i, j], i, h) for i in range(d)) for j in range(d)]
        )

    def _first(self, values: np.ndarray, axis: int, h: float) -> np.ndarray:
        return np.gradient(values, h, axis=axis, edge_order=2)

    def _second(self, values: np.ndarray, axis: int, h: float) -> np.ndarray:
        moved = np.moveaxis(values, axis, 0)
        result = np.empty_like(moved)
        result[1:-1] = (moved[2:] - 2.0 * moved[1:-1] + moved[:-2]) / h**2
        result[0] = (2.0 * moved[0] - 5.0 * moved[1] + 4.0 * moved[2] - moved[3]) / h**2
        result[-1] = (2.0 * moved[-1] - 5.0 * moved[-2] + 4.0 * moved[-3] - moved[-4]) / h**2
        return np.moveaxis(result, 0, axis)
