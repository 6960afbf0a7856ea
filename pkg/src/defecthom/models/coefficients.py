"""Coefficient model: periodic background plus a localized defect, evaluated in closed form."""

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import numpy as np

from .field import Field
from .grids import Grid

Evaluator = Callable[[np.ndarray], np.ndarray]
"""Maps points of shape (d, ...) to components-first values of shape (d,)*rank + (...)."""


@dataclass(frozen=True, eq=False)
class CoefficientSet:
    """a = a_per + a_tilde and b = b_per + b_tilde, with decay and ellipticity metadata.

    Missing defect evaluators mean the defect part vanishes identically.
    """

    name: str
    d: int
    a_per: Evaluator
    b_per: Evaluator
    a_tilde: Optional[Evaluator] = None
    b_tilde: Optional[Evaluator] = None
    r: float = 1.0
    s: float = 1.0
    lambda_min: float = 1.0
    lambda_max: float = 1.0
    params: dict[str, Any] = field(default_factory=dict)
    counterexample: bool = False
    outside_hypothesis: bool = False
    potential: Optional[Evaluator] = None

    @property
    def has_a_defect(self) -> bool:
        """True when a_tilde is not identically zero."""
        return self.a_tilde is not None

    @property
    def has_b_defect(self) -> bool:
        """True when b_tilde is not identically zero."""
        return self.b_tilde is not None

    @property
    def has_defect(self) -> bool:
        """True when either defect part is present."""
        return self.has_a_defect or self.has_b_defect

    def _sample(self, evaluator: Optional[Evaluator], grid: Grid, rank: int) -> np.ndarray:
        if grid.d != self.d:
            raise ValueError(f"grid dimension {grid.d} does not match coefficients ({self.d})")
        return self._evaluate(evaluator, grid.coordinates(), rank)

    def _evaluate(
        self, evaluator: Optional[Evaluator], points: np.ndarray, rank: int
    ) -> np.ndarray:
        shape = (self.d,) * rank + points.shape[1:]
        if evaluator is None:
            return np.zeros(shape)
        values = np.broadcast_to(evaluator(points), shape)
        return np.array(values, dtype=np.float64)

    def sample_a_per(self, grid: Grid) -> Field:
        """Periodic diffusion matrix on the grid."""
        return Field.symmetrized(grid, self._sample(self.a_per, grid, 2), "a_per")

    def sample_a_tilde(self, grid: Grid) -> Field:
        """Diffusion defect on the grid."""
        return Field.symmetrized(grid, self._sample(self.a_tilde, grid, 2), "a_tilde")

    def sample_a(self, grid: Grid) -> Field:
        """Full diffusion matrix on the grid."""
        values = self._sample(self.a_per, grid, 2) + self._sample(self.a_tilde, grid, 2)
        return Field.symmetrized(grid, values, "a")

    def sample_b_per(self, grid: Grid) -> Field:
        """Periodic drift on the grid."""
        return Field.vector(grid, self._sample(self.b_per, grid, 1), "b_per")

    def sample_b_tilde(self, grid: Grid) -> Field:
        """Drift defect on the grid."""
        return Field.vector(grid, self._sample(self.b_tilde, grid, 1), "b_tilde")

    def sample_b(self, grid: Grid) -> Field:
        """Full drift on the grid."""
        values = self._sample(self.b_per, grid, 1) + self._sample(self.b_tilde, grid, 1)
        return Field.vector(grid, values, "b")

    def sample_rescaled(self, grid: Grid, eps: float) -> tuple[np.ndarray, np.ndarray]:
        """Full a(x / eps) and b(x / eps) on the grid nodes, defect included."""
        if grid.d != self.d:
            raise ValueError(f"grid dimension {grid.d} does not match coefficients ({self.d})")
        points = grid.coordinates() / eps
        a = self._evaluate(self.a_per, points, 2) + self._evaluate(self.a_tilde, points, 2)
        b = self._evaluate(self.b_per, points, 1) + self._evaluate(self.b_tilde, points, 1)
        return 0.5 * (a + np.swapaxes(a, 0, 1)), b

    def sample_potential(self, grid: Grid) -> Field:
        """Defect potential psi with b_tilde = grad psi, or zero when the family has none."""
        return Field.scalar(grid, self._sample(self.potential, grid, 0), "psi")

    def scaled_defect(self, factor: float) -> "CoefficientSet":
        """Same background with the defect multiplied by a constant."""

        def scale(evaluator: Optional[Evaluator]) -> Optional[Evaluator]:
            if evaluator is None:
                return None
            return lambda x: factor * evaluator(x)

        return CoefficientSet(
            name=self.name,
            d=self.d,
            a_per=self.a_per,
            b_per=self.b_per,
            a_tilde=scale(self.a_tilde),
            b_tilde=scale(self.b_tilde),
            r=self.r,
            s=self.s,
            lambda_min=self.lambda_min,
            lambda_max=self.lambda_max,
            params=dict(self.params),
            counterexample=self.counterexample,
            outside_hypothesis=self.outside_hypothesis,
            potential=scale(self.potential),
        )

    def as_object(self) -> Any:
        """Serializable identity of the coefficient set."""
        return {"family": self.name, "d": self.d, "params": self.params}


@dataclass
class ValidationReport:
    """Measured ellipticity and decay of a coefficient set against its declared assumptions."""

    lambda_est: float
    Lambda_est: float
    decay_fit_a: Optional[float]
    decay_fit_b: Optional[float]
    flags: list[str]
    notes: list[str]

    @property
    def passed(self) -> bool:
        """True when no assumption is flagged."""
        return not self.flags

    def as_object(self) -> Any:
        """Converts class to object"""
        return {
            "lambda_est": self.lambda_est,
            "Lambda_est": self.Lambda_est,
            "decay_fit_a": self.decay_fit_a,
            "decay_fit_b": self.decay_fit_b,
            "flags": list(self.flags),
            "notes": list(self.notes),
        }
