"""Data models of the oscillatory problem sweep."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .field import Field
from .grids import DomainGrid


@dataclass(frozen=True, eq=False)
class EpsProblem:
    """Homogeneous Dirichlet problem on a box domain for a decreasing list of scales."""

    domain: DomainGrid
    eps_list: tuple[float, ...]
    f: Field

    def __post_init__(self):
        object.__setattr__(self, "eps_list", tuple(float(eps) for eps in self.eps_list))
        if self.f.grid != self.domain or self.f.rank != 0:
            raise ValueError("right-hand side must be a scalar field on the domain grid")
        EpsProblem.check_scales(self.domain, self.eps_list)

    @staticmethod
    def check_scales(domain: DomainGrid, eps_list: tuple[float, ...]):
        """Raises ValueError unless the scales decrease and every period is resolved."""
        if len(eps_list) < 3:
            raise ValueError("at least three scales are required")
        for previous, current in zip(eps_list, eps_list[1:]):
            if not current < previous:
                raise ValueError("scales must be strictly decreasing")
        lower, upper = domain.bounds()
        h = domain.h
        for eps in eps_list:
            if not 0.0 < eps < 1.0 or abs(1.0 / eps - round(1.0 / eps)) > 1e-9:
                raise ValueError(f"scale {eps} is not the reciprocal of an integer")
            if h > eps / 16.0 + 1e-15:
                raise ValueError(f"spacing {h} does not resolve scale {eps} with 16 points")
            for ratio in (eps / h, lower / h):
                if abs(ratio - round(ratio)) > 1e-9:
                    raise ValueError(f"scale {eps} and domain are not aligned with the grid")
        if abs((upper - lower) / h - round((upper - lower) / h)) > 1e-9:
            raise ValueError("domain length is not a multiple of the spacing")

    def eps_label(self, eps: float) -> str:
        """Readable 1/k form of a scale."""
        return str(Fraction(eps).limit_denominator(1 << 20))


@dataclass
class RateFit:
    """Least squares slope of log values against log scales."""

    slope: float
    intercept: float
    residual: float
    band: float
    points: int

    def as_object(self) -> Any:
        """Converts class to object"""
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "residual": self.residual,
            "band": self.band,
            "points": self.points,
        }


@dataclass
class TwoScaleError:
    """Errors of the homogenized solution and of the first order expansion."""

    l2: float
    h1_interior: float
    w1inf_interior: float

    def as_object(self) -> Any:
        """Converts class to object"""
        return {
            "l2": self.l2,
            "h1_interior": self.h1_interior,
            "w1inf_interior": self.w1inf_interior,
        }


@dataclass
class ScaleRow:
    """One scale of a convergence study."""

    eps: float
    l2_error: float
    h1_error: float
    w1inf_error: float
    hessian_norm: float
    h1_error_periodic_only: Optional[float] = None
    w1inf_error_periodic_only: Optional[float] = None


COLUMNS = (
    "eps",
    "l2_error",
    "h1_error",
    "w1inf_error",
    "hessian_norm",
    "h1_error_periodic_only",
    "w1inf_error_periodic_only",
)


@dataclass
class ConvergenceReport:
    """Errors per scale and fitted rates."""

    rows: list[ScaleRow]
    slopes: dict[str, RateFit] = field(default_factory=dict)
    flags: list[str] = field(default_factory=list)

    def column(self, name: str) -> list[float]:
        """Values of one column in scale order."""
        return [getattr(row, name) for row in self.rows]

    def table(self, columns: tuple[str, ...] = COLUMNS) -> list[list[Any]]:
        """Rows restricted to the requested columns, header first."""
        table: list[list[Any]] = [list(columns)]
        for row in self.rows:
            values = [getattr(row, name) for name in columns]
            table.append(["" if value is None else value for value in values])
        return table

    def summary(self) -> Any:
        """Scalar data of the study."""
        return {
            "slopes": {key: fit.as_object() for key, fit in self.slopes.items()},
            "flags": list(self.flags),
        }
