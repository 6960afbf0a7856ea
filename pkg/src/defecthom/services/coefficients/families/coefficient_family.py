"""Imports for the family definition."""

from abc import ABC, abstractmethod
from typing import Any

from defecthom.models import CoefficientSet


class CoefficientFamily(ABC):
    """A named, parameterized closed-form coefficient set."""

    name: str = ""
    counterexample: bool = False

    @abstractmethod
    def defaults(self) -> dict[str, Any]:
        """Default parameters."""

    @abstractmethod
    def build(self, params: dict[str, Any]) -> CoefficientSet:
        """Builds the coefficient set; raises ValueError for parameters out of range."""

    def resolve(self, params: dict[str, Any]) -> dict[str, Any]:
        """Defaults overridden by the given parameters; unknown keys are rejected."""
        resolved = self.defaults()
        unknown = sorted(set(params) - set(resolved))
        if unknown:
            raise ValueError(f'unknown parameters for "{self.name}": {", ".join(unknown)}')
        resolved.update(params)
        return resolved
