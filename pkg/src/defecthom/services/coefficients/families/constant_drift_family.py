"""a = 1, b_per = drift: the zero-drift condition fails and no periodic corrector exists."""

from typing import Any

import numpy as np

from defecthom.models import CoefficientSet

from .coefficient_family import CoefficientFamily
from .profiles import identity


class ConstantDriftFamily(CoefficientFamily):
    """Counterexample to the zero-drift condition in one dimension."""

    name = "constant-drift-1d"
    counterexample = True

    def defaults(self) -> dict[str, Any]:
        return {"drift": 1.0}

    def build(self, params: dict[str, Any]) -> CoefficientSet:
        resolved = self.resolve(params)
        drift = float(resolved["drift"])

        def b_per(x: np.ndarray) -> np.ndarray:
            return np.full(x.shape, drift)

        return CoefficientSet(
            name=self.name,
            d=1,
            a_per=identity,
            b_per=b_per,
            lambda_min=1.0,
            lambda_max=1.0,
            params=resolved,
            counterexample=True,
            outside_hypothesis=True,
        )
