"""Defect decaying like |x|^(-gamma) over the identity background."""

from typing import Any

import numpy as np

from defecthom.models import CoefficientSet

from .coefficient_family import CoefficientFamily
from .profiles import algebraic, along, check_dimension, identity, scaled_identity, zero_vector


class AlgebraicDecayFamily(CoefficientFamily):
    """a = (1 + amp (1 + |x|^2)^(-gamma/2)) Id, b = amp (1 + |x|^2)^(-gamma/2) e_1.

    The defect lies in L^r exactly when gamma r > d; parameters outside that range
    are accepted only when the set is marked as a counterexample.
    """

    name = "algebraic-decay-defect"

    def defaults(self) -> dict[str, Any]:
        return {"d": 3, "gamma": 3.0, "amp": 0.5, "r": 1.2, "s": 1.2, "counterexample": False}

    def build(self, params: dict[str, Any]) -> CoefficientSet:
        resolved = self.resolve(params)
        d = int(resolved["d"])
        check_dimension(d)
        gamma = float(resolved["gamma"])
        amp = float(resolved["amp"])
        r = float(resolved["r"])
        s = float(resolved["s"])
        counterexample = bool(resolved["counterexample"])
        if amp <= -1.0:
            raise ValueError(f"amp = {amp} makes a = (1 + amp g) Id lose ellipticity")
        for label, exponent in (("r", r), ("s", s)):
            if gamma * exponent <= d and not counterexample:
                raise ValueError(
                    f"gamma = {gamma:g} with {label} = {exponent:g} gives "
                    f"gamma {label} <= d = {d}: the defect is not in L^{label}"
                )

        def a_tilde(x: np.ndarray) -> np.ndarray:
            return scaled_identity(amp * algebraic(x, gamma), d)

        def b_tilde(x: np.ndarray) -> np.ndarray:
            return along(0, amp * algebraic(x, gamma), d)

        return CoefficientSet(
            name=self.name,
            d=d,
            a_per=identity,
            b_per=zero_vector,
            a_tilde=a_tilde,
            b_tilde=b_tilde,
            r=r,
            s=s,
            lambda_min=min(1.0, 1.0 + amp),
            lambda_max=max(1.0, 1.0 + amp),
            params=resolved,
            counterexample=counterexample,
            outside_hypothesis=d < 3,
        )
