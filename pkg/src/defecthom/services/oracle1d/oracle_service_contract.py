"""Imports for the interface definition."""

from abc import ABC, abstractmethod
from typing import Optional

from defecthom.models import (
    CoefficientSet,
    DefectCorrectorOracle,
    Field,
    Grid,
    GradientDefectMeasure,
    OneDProfile,
    OperationResult,
)
from defecthom.models.oracle import ScalarFunction


class OracleServiceContract(ABC):
    """Closed-form one dimensional correctors and measures evaluated by quadrature."""

    @abstractmethod
    def profile(
        self, b_per: ScalarFunction, b_tilde: Optional[ScalarFunction] = None
    ) -> OperationResult[OneDProfile]:
        """Integrating factors B_per, B_tilde and the averages of exp(+-B_per)."""

    @abstractmethod
    def periodic_corrector_1d(self, b_per: ScalarFunction) -> OperationResult[ScalarFunction]:
        """w'_per = -1 + exp(B_per) / <exp(B_per)>; fails when <b_per> != 0."""

    @abstractmethod
    def periodic_measure_1d(self, b_per: ScalarFunction) -> OperationResult[ScalarFunction]:
        """m_per = exp(-B_per) / <exp(-B_per)>."""

    @abstractmethod
    def defect_corrector_1d(
        self, b_per: ScalarFunction, b_tilde: ScalarFunction
    ) -> OperationResult[DefectCorrectorOracle]:
        """w~' = exp(B_per) / <exp(B_per)> (exp(-B_tilde) - 1) with the sublinearity verdict."""

    @abstractmethod
    def defect_measure_1d(
        self, b_per: ScalarFunction, b_tilde: ScalarFunction
    ) -> OperationResult[ScalarFunction]:
        """m~ = m_per (exp(B_tilde) - 1), normalized so that m~ vanishes at -infinity."""

    @abstractmethod
    def gradient_defect_measure(
        self, psi_tilde: ScalarFunction, d: int
    ) -> OperationResult[GradientDefectMeasure]:
        """m = exp(-psi) and m~ = m - 1 for a drift defect grad psi over a = Id, b_per = 0.

        psi and the returned functions take points of shape (d, ...).
        """

    @abstractmethod
    def coefficient_functions(
        self, coefficients: CoefficientSet
    ) -> OperationResult[tuple[ScalarFunction, Optional[ScalarFunction]]]:
        """b_per and b_tilde of a one dimensional coefficient set as functions of x."""

    @abstractmethod
    def sample(self, function: ScalarFunction, grid: Grid, label: str) -> OperationResult[Field]:
        """Samples a function of the coordinate x on a one dimensional grid."""
