"""Gaussian bump defect over a gradient-plus-swirl periodic drift."""

import math
from typing import Any

import numpy as np

from defecthom.models import CoefficientSet

from .coefficient_family import CoefficientFamily
from .profiles import along, check_dimension, gaussian, identity, periodic, scaled_identity


class GaussianBumpFamily(CoefficientFamily):
    """
    a = (1 + a_amp g) Id and b = grad V + swirl sin(2 pi x_1) e_2 + b_amp g e_1 with
    V = potential cos(2 pi x_1) and g = exp(-|x|^2 / 2 width^2).

    The periodic measure is m_per = exp(-V) / <exp(-V)>.
    """

    name = "gaussian-bump-defect"

    def defaults(self) -> dict[str, Any]:
        return {
            "d": 3,
            "a_amp": 0.5,
            "b_amp": 0.5,
            "width": 1.0,
            "potential": 0.25,
            "swirl": 0.25,
            "r": 1.2,
            "s": 1.2,
        }

    def build(self, params: dict[str, Any]) -> CoefficientSet:
        resolved = self.resolve(params)
        d = int(resolved["d"])
        check_dimension(d)
        a_amp = float(resolved["a_amp"])
        b_amp = float(resolved["b_amp"])
        width = float(resolved["width"])
        potential = float(resolved["potential"])
        swirl = float(resolved["swirl"])
        if a_amp <= -1.0:
            raise ValueError(f"a_amp = {a_amp} makes a = (1 + a_amp g) Id lose ellipticity")
        if width <= 0.0:
            raise ValueError(f"width must be positive, got {width}")

        def b_per(x: np.ndarray) -> np.ndarray:
            phase = 2.0 * math.pi * x[0]
            result = np.zeros(x.shape)
            result[0] = -2.0 * math.pi * potential * np.sin(phase)
            if d >= 2:
                result[1] = swirl * np.sin(phase)
            return result

        def a_tilde(x: np.ndarray) -> np.ndarray:
            return scaled_identity(a_amp * gaussian(x, width), d)

        def b_tilde(x: np.ndarray) -> np.ndarray:
            return along(0, b_amp * gaussian(x, width), d)

        return CoefficientSet(
            name=self.name,
            d=d,
            a_per=identity,
            b_per=periodic(b_per),
            a_tilde=a_tilde if a_amp != 0.0 else None,
            b_tilde=b_tilde if b_amp != 0.0 else None,
            r=float(resolved["r"]),
            s=float(resolved["s"]),
            lambda_min=min(1.0, 1.0 + a_amp),
            lambda_max=max(1.0, 1.0 + a_amp),
            params=resolved,
            outside_hypothesis=d < 3,
        )
