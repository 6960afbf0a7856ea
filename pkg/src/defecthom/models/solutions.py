"""Solution data models for the cell and defect problems."""

from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from .field import Field
from .grids import BoxGrid, TorusGrid


@dataclass(frozen=True, eq=False)
class CellSolution:
    """Periodic invariant measure, correctors, skew potential and homogenized tensor."""

    grid: TorusGrid
    m_per: Field
    w_per: tuple[Field, ...]
    B_per: Field
    A_per: Field
    A_star: np.ndarray
    drift: np.ndarray
    A_star_discrepancy: float = 0.0
    ellipticity_margin: float = 0.0
    residuals: dict[str, float] = field(default_factory=dict)

    @property
    def d(self) -> int:
        """Dimension."""
        return self.grid.d

    @property
    def A_star_symmetric(self) -> np.ndarray:
        """Symmetric part of the homogenized tensor."""
        return 0.5 * (self.A_star + self.A_star.T)

    def summary(self) -> Any:
        """Scalar data of the solution."""
        return {
            "grid": self.grid.as_object(),
            "A_star": self.A_star.tolist(),
            "drift": self.drift.tolist(),
            "A_star_discrepancy": self.A_star_discrepancy,
            "ellipticity_margin": self.ellipticity_margin,
            "min_m_per": float(np.min(self.m_per.values)),
            "residuals": dict(self.residuals),
        }


@dataclass(frozen=True)
class DecayExponents:
    """Integrability exponents of the defect objects; inf marks an empty constraint."""

    q_star: float
    q_prime: float
    alpha: float

    def as_object(self) -> Any:
        """Converts class to object"""
        return {"q_star": self.q_star, "q_prime": self.q_prime, "alpha": self.alpha}


@dataclass
class ShellProfile:
    """Per-shell values on dyadic shells R_k <= |x| < 2 R_k."""

    radii: list[float]
    values: list[float]
    skipped: list[float] = field(default_factory=list)

    def as_rows(self) -> list[tuple[float, float]]:
        """Pairs of radius and value."""
        return list(zip(self.radii, self.values))


@dataclass
class DecayReport:
    """Shell norms of one defect object at its theoretical exponent."""

    which: str
    exponent: float
    shells: list[float]
    norms: list[float]
    fitted_rate: Optional[float]
    fit_residual: Optional[float]
    sublinearity: list[float]
    sublinearity_decreasing: Optional[bool]

    def rows(self) -> list[list[float]]:
        """CSV rows: radius, norm, sublinearity ratio (blank when not computed)."""
        rows: list[list[float]] = []
        for index, radius in enumerate(self.shells):
            ratio = self.sublinearity[index] if index < len(self.sublinearity) else float("nan")
            rows.append([radius, self.norms[index], ratio])
        return rows

    def as_object(self) -> Any:
        """Converts class to object"""
        return {
            "which": self.which,
            "exponent": self.exponent,
            "fitted_rate": self.fitted_rate,
            "fit_residual": self.fit_residual,
            "sublinearity_decreasing": self.sublinearity_decreasing,
        }


@dataclass(frozen=True, eq=False)
class DefectSolution:
    """Box solutions of the defect-induced perturbations."""

    grid: BoxGrid
    m_tilde: Field
    w_tilde: tuple[Field, ...]
    B_tilde: Field
    exponents: DecayExponents
    decay: dict[str, DecayReport] = field(default_factory=dict)
    residuals: dict[str, float] = field(default_factory=dict)

    @property
    def q_star(self) -> float:
        """Exponent of the corrector gradients."""
        return self.exponents.q_star

    @property
    def q_prime(self) -> float:
        """Exponent of the measure perturbation."""
        return self.exponents.q_prime

    def summary(self) -> Any:
        """Scalar data of the solution."""
        return {
            "grid": self.grid.as_object(),
            "exponents": self.exponents.as_object(),
            "min_m_tilde": float(np.min(self.m_tilde.values)),
            "decay": {key: report.as_object() for key, report in self.decay.items()},
            "residuals": dict(self.residuals),
        }
