"""Identity coefficients: a = Id, b = 0, no defect."""

from typing import Any

from defecthom.models import CoefficientSet

from .coefficient_family import CoefficientFamily
from .profiles import check_dimension, identity, zero_vector


class IdentityFamily(CoefficientFamily):
    """The Laplacian; every corrector vanishes and A* = Id."""

    name = "identity"

    def defaults(self) -> dict[str, Any]:
        return {"d": 2}

    def build(self, params: dict[str, Any]) -> CoefficientSet:
        resolved = self.resolve(params)
        d = int(resolved["d"])
        check_dimension(d)
        return CoefficientSet(
            name=self.name,
            d=d,
            a_per=identity,
            b_per=zero_vector,
            lambda_min=1.0,
            lambda_max=1.0,
            params=resolved,
        )
