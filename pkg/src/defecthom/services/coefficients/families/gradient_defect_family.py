"""a = Id, b_per = 0 and a gradient drift defect b_tilde = grad psi."""

from typing import Any

import numpy as np

from defecthom.models import CoefficientSet

from .coefficient_family import CoefficientFamily
from .profiles import check_dimension, identity, radius_squared, zero_vector

PSI_KINDS = ("gaussian", "algebraic")


class GradientDefectFamily(CoefficientFamily):
    """The invariant measure is exp(-psi) in closed form."""

    name = "gradient-defect"

    def defaults(self) -> dict[str, Any]:
        return {
            "d": 3,
            "psi": {"kind": "gaussian", "height": 1.0, "width": 1.0, "gamma": 2.0},
            "r": 1.2,
            "s": 1.2,
        }

    def resolve(self, params: dict[str, Any]) -> dict[str, Any]:
        resolved = super().resolve(params)
        psi = dict(self.defaults()["psi"])
        psi.update(params.get("psi", {}))
        resolved["psi"] = psi
        return resolved

    def build(self, params: dict[str, Any]) -> CoefficientSet:
        resolved = self.resolve(params)
        d = int(resolved["d"])
        check_dimension(d)
        psi = resolved["psi"]
        kind = psi["kind"]
        height = float(psi["height"])
        width = float(psi["width"])
        gamma = float(psi["gamma"])
        if kind not in PSI_KINDS:
            raise ValueError(f'psi kind must be one of {", ".join(PSI_KINDS)}, got "{kind}"')
        if width <= 0.0:
            raise ValueError(f"psi width must be positive, got {width}")

        if kind == "gaussian":

            def potential(x: np.ndarray) -> np.ndarray:
                return height * np.exp(-radius_squared(x) / (2.0 * width**2))

            def b_tilde(x: np.ndarray) -> np.ndarray:
                return -x / width**2 * potential(x)

        else:

            def potential(x: np.ndarray) -> np.ndarray:
                return height * (1.0 + radius_squared(x) / width**2) ** (-0.5 * gamma)

            def b_tilde(x: np.ndarray) -> np.ndarray:
                base = 1.0 + radius_squared(x) / width**2
                return -gamma * height * x / width**2 * base ** (-0.5 * gamma - 1.0)

        return CoefficientSet(
            name=self.name,
            d=d,
            a_per=identity,
            b_per=zero_vector,
            b_tilde=b_tilde if height != 0.0 else None,
            r=float(resolved["r"]),
            s=float(resolved["s"]),
            lambda_min=1.0,
            lambda_max=1.0,
            params=resolved,
            outside_hypothesis=d < 3,
            potential=potential,
        )
