"""Linear solve outcome data model."""

from dataclasses import dataclass, field
from typing import Any

import numpy as np


@dataclass
class SolveReport:
    """Method, size, iterations and verified normwise backward error of one linear solve."""

    method: str
    unknowns: int
    iterations: int
    residual: float
    history: list[float] = field(default_factory=list)

    def as_object(self) -> Any:
        """Converts class to object"""
        return {
            "method": self.method,
            "unknowns": self.unknowns,
            "iterations": self.iterations,
            "residual": self.residual,
        }


@dataclass
class LinearSolution:
    """Solution vector with its report; multiplier is set for bordered systems."""

    values: np.ndarray
    report: SolveReport
    multiplier: float = 0.0
