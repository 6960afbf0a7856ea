"""Closed-form one dimensional profiles."""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

ScalarFunction = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class OneDProfile:
    """Integrating factors of a one dimensional drift.

    B_per(x) is the antiderivative of b_per vanishing at 0 and B_tilde' = -b_tilde.
    normalization_plus = <exp(B_per)>, normalization_minus = <exp(-B_per)>.
    """

    b_per: ScalarFunction
    B_per: ScalarFunction
    normalization_plus: float
    normalization_minus: float
    b_tilde: Optional[ScalarFunction] = None
    B_tilde: Optional[ScalarFunction] = None


@dataclass(frozen=True, eq=False)
class DefectCorrectorOracle:
    """Derivative of the one dimensional defect corrector with its sublinearity verdict."""

    derivative: ScalarFunction
    B_tilde: ScalarFunction
    sublinear: bool
    left_integral: float
    right_integral: float
    anchored_at_minus_infinity: bool

    @property
    def total_integral(self) -> float:
        """Integral of b_tilde over the real line (inf when a half-line diverges)."""
        return self.left_integral + self.right_integral


@dataclass(frozen=True, eq=False)
class GradientDefectMeasure:
    """m = exp(-psi) and its perturbation m - 1."""

    m: ScalarFunction
    m_tilde: ScalarFunction
