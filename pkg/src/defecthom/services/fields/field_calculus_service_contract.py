"""Imports for the interface definition."""

from abc import ABC, abstractmethod

import numpy as np

from defecthom.models import Field, OperationResult, Region, ShellProfile

DERIVATIVE_KINDS = ("grad", "hess", "div")


class FieldCalculusServiceContract(ABC):
    """Discrete calculus and norm diagnostics on fields."""

    @abstractmethod
    def differentiate(self, f: Field, kind: str) -> OperationResult[Field]:
        """Gradient or Hessian of a scalar, divergence of a vector or matrix."""

    @abstractmethod
    def mean(self, f: Field) -> OperationResult[float | np.ndarray]:
        """Cell average of a field on a torus grid, per component."""

    @abstractmethod
    def lq_norm(
        self, f: Field, exponents: list[float], region: Region | None = None
    ) -> OperationResult[float]:
        """Sum of the L^q norms over the region for every listed exponent."""

    @abstractmethod
    def annular_profile(
        self, f: Field, q: float, max_radius: float | None = None
    ) -> OperationResult[ShellProfile]:
        """L^q norms on the dyadic shells R_k <= |x| < 2 R_k clipped to the box.

        Shells run over R_k = 2^k below max_radius, which defaults to the box corner
        distance so that every shell keeps a positive volume inside the box.
        """

    @abstractmethod
    def sublinearity_ratio(
        self, w: Field, max_radius: float | None = None
    ) -> OperationResult[ShellProfile]:
        """Per-shell maximum of |w(x)| / (1 + |x|)."""
