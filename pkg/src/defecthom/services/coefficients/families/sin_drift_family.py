"""One dimensional drift b_per = amp sin(2 pi x) with an optional localized drift defect."""

import math
from typing import Any

import numpy as np

from defecthom.models import CoefficientSet

from .coefficient_family import CoefficientFamily
from .profiles import identity, periodic

DEFECT_KINDS = ("odd-gaussian", "sqrt-tail")


class SinDriftFamily(CoefficientFamily):
    """
    a = 1 and b_per(x) = amp sin(2 pi x), so B_per(x) = amp (1 - cos 2 pi x) / (2 pi).

    The "odd-gaussian" defect b_tilde = defect_amp (-x / w^2) exp(-x^2 / 2w^2) has zero
    integral and B_tilde = -defect_amp exp(-x^2 / 2w^2). The "sqrt-tail" defect
    defect_amp (1 + x^2)^(-1/4) is not integrable and breaks sublinearity.
    """

    name = "sin-drift-1d"

    def defaults(self) -> dict[str, Any]:
        return {"amp": 1.0, "defect_amp": 0.0, "defect_width": 0.5, "defect_kind": "odd-gaussian"}

    def build(self, params: dict[str, Any]) -> CoefficientSet:
        resolved = self.resolve(params)
        amp = float(resolved["amp"])
        defect_amp = float(resolved["defect_amp"])
        width = float(resolved["defect_width"])
        kind = resolved["defect_kind"]
        if kind not in DEFECT_KINDS:
            raise ValueError(f'defect_kind must be one of {", ".join(DEFECT_KINDS)}, got "{kind}"')
        if width <= 0.0:
            raise ValueError(f"defect_width must be positive, got {width}")

        def b_per(x: np.ndarray) -> np.ndarray:
            return amp * np.sin(2.0 * math.pi * x)

        b_tilde = None
        potential = None
        if defect_amp != 0.0 and kind == "odd-gaussian":

            def b_tilde(x: np.ndarray) -> np.ndarray:
                return defect_amp * (-x / width**2) * np.exp(-(x**2) / (2.0 * width**2))

            def potential(x: np.ndarray) -> np.ndarray:
                return defect_amp * np.exp(-x[0] ** 2 / (2.0 * width**2))

        elif defect_amp != 0.0:

            def b_tilde(x: np.ndarray) -> np.ndarray:
                return defect_amp * (1.0 + x**2) ** -0.25

        return CoefficientSet(
            name=self.name,
            d=1,
            a_per=identity,
            b_per=periodic(b_per),
            b_tilde=b_tilde,
            r=1.0,
            s=1.0,
            lambda_min=1.0,
            lambda_max=1.0,
            params=resolved,
            counterexample=defect_amp != 0.0 and kind == "sqrt-tail",
            outside_hypothesis=True,
            potential=potential,
        )
