"""Two dimensional shear flow b = (amp sin 2 pi x_2, 0) with a = Id."""

import math
from typing import Any

import numpy as np

from defecthom.models import CoefficientSet

from .coefficient_family import CoefficientFamily
from .profiles import identity, periodic


class ShearFamily(CoefficientFamily):
    """
    Divergence-free periodic drift: m_per = 1, the e_1 corrector is
    W(x_2) = -amp sin(2 pi x_2) / (4 pi^2) and A*_11 = 1 + amp^2 / (8 pi^2).
    """

    name = "shear-2d"

    def defaults(self) -> dict[str, Any]:
        return {"amp": 1.0}

    def build(self, params: dict[str, Any]) -> CoefficientSet:
        resolved = self.resolve(params)
        amp = float(resolved["amp"])

        def b_per(x: np.ndarray) -> np.ndarray:
            result = np.zeros(x.shape)
            result[0] = amp * np.sin(2.0 * math.pi * x[1])
            return result

        return CoefficientSet(
            name=self.name,
            d=2,
            a_per=identity,
            b_per=periodic(b_per),
            lambda_min=1.0,
            lambda_max=1.0,
            params=resolved,
        )
