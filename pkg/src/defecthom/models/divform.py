"""Divergence form data models."""

from dataclasses import dataclass, field
from typing import Any, Optional

from .field import Field
from .grids import BoxGrid


@dataclass(frozen=True, eq=False)
class DivFormProblem:
    """The matrix m a - B on the box, with its measure and consistency diagnostics."""

    grid: BoxGrid
    A: Field
    m: Field
    A_tilde: Field
    ellipticity_margin: float
    divergence_residual: float
    residual_identity: Optional[float] = None
    diagnostics: dict[str, float] = field(default_factory=dict)

    def summary(self) -> Any:
        """Scalar data of the assembly."""
        return {
            "grid": self.grid.as_object(),
            "ellipticity_margin": self.ellipticity_margin,
            "divergence_residual": self.divergence_residual,
            "residual_identity": self.residual_identity,
            "diagnostics": dict(self.diagnostics),
        }


@dataclass
class CrossValidationReport:
    """Gradient discrepancy of the two corrector routes on the inner half box."""

    relative_l2: float
    relative_q_star: float
    q_star: float
    tolerance: float

    @property
    def within_tolerance(self) -> bool:
        """True when the L2 discrepancy meets the tolerance."""
        return self.relative_l2 <= self.tolerance

    def as_object(self) -> Any:
        """Converts class to object"""
        return {
            "relative_l2": self.relative_l2,
            "relative_q_star": self.relative_q_star,
            "q_star": self.q_star,
            "tolerance": self.tolerance,
            "within_tolerance": self.within_tolerance,
        }
