"""Estimate-constant probe result."""

from dataclasses import dataclass, field
from typing import Any


@dataclass
class ProbeReport:
    """Ratios of solution norms to data norms on a box and on the doubled box."""

    q: float
    q_star: float
    labels: list[str]
    ratios: list[float]
    ratios_doubled: list[float]
    skipped: list[str] = field(default_factory=list)

    @property
    def max_ratio(self) -> float:
        """Empirical constant on the smaller box."""
        return max(self.ratios) if self.ratios else 0.0

    @property
    def max_ratio_doubled(self) -> float:
        """Empirical constant on the doubled box."""
        return max(self.ratios_doubled) if self.ratios_doubled else 0.0

    @property
    def growth(self) -> float:
        """Ratio of the two empirical constants."""
        if self.max_ratio == 0.0:
            return 1.0
        return self.max_ratio_doubled / self.max_ratio

    @property
    def stable(self) -> bool:
        """True unless the constant grew by more than half when the box doubled."""
        return self.growth <= 1.5

    def as_object(self) -> Any:
        """Converts class to object"""
        return {
            "q": self.q,
            "q_star": self.q_star,
            "labels": list(self.labels),
            "ratios": list(self.ratios),
            "ratios_doubled": list(self.ratios_doubled),
            "skipped": list(self.skipped),
            "max_ratio": self.max_ratio,
            "max_ratio_doubled": self.max_ratio_doubled,
            "growth": self.growth,
            "stable": self.stable,
        }
