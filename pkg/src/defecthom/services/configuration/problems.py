"""Construction of the oscillatory problems named by a configuration."""

import numpy as np

from defecthom.models import DomainGrid, EpsProblem, Field
from defecthom.models.configuration import DEFAULT_EPS_LIST, RHS_KINDS, ExperimentConfig


def domain_grid(config: ExperimentConfig, d: int) -> DomainGrid:
    """The bounded domain of the multiscale runs."""
    domain = config.grid.domain
    return DomainGrid(d, float(domain.lower), float(domain.upper), int(domain.n))


def eps_scales(config: ExperimentConfig) -> tuple[float, ...]:
    """Configured scales, coarsest first."""
    return tuple(float(eps) for eps in config.setting("eps_list", list(DEFAULT_EPS_LIST)))


def rhs_kind(config: ExperimentConfig) -> str:
    """Configured right-hand side; raises ValueError for unknown kinds."""
    kind = str(config.setting("rhs", "sine"))
    if kind not in RHS_KINDS:
        raise ValueError(f'rhs must be one of {", ".join(RHS_KINDS)}, got "{kind}"')
    return kind


def right_hand_side(grid: DomainGrid, kind: str) -> Field:
    """f = 1, or the product of half sine waves vanishing on the boundary."""
    if kind not in RHS_KINDS:
        raise ValueError(f'rhs must be one of {", ".join(RHS_KINDS)}, got "{kind}"')
    if kind == "one":
        return Field.scalar(grid, np.ones(grid.shape), "f")
    lower, upper = grid.bounds()
    phase = np.pi * (grid.coordinates() - lower) / (upper - lower)
    return Field.scalar(grid, np.prod(np.sin(phase), axis=0), "f")


def check_eps_problem(config: ExperimentConfig, d: int):
    """Same checks as build_eps_problem without sampling the right-hand side."""
    rhs_kind(config)
    EpsProblem.check_scales(domain_grid(config, d), eps_scales(config))


def build_eps_problem(config: ExperimentConfig, d: int) -> EpsProblem:
    """Raises ValueError when the scales or the domain grid are inconsistent."""
    grid = domain_grid(config, d)
    return EpsProblem(grid, eps_scales(config), right_hand_side(grid, rhs_kind(config)))
