"""Necessary imports for export."""

from .experiment_config import (
    DEFAULT_EPS_LIST,
    EXPERIMENT_KINDS,
    EXPERIMENT_SETTINGS,
    RHS_KINDS,
    CacheSettings,
    ConfigOverrides,
    DomainSettings,
    ExperimentConfig,
    GridSettings,
    SolverSettings,
)

__all__ = [
    "CacheSettings",
    "ConfigOverrides",
    "DEFAULT_EPS_LIST",
    "DomainSettings",
    "EXPERIMENT_KINDS",
    "EXPERIMENT_SETTINGS",
    "ExperimentConfig",
    "GridSettings",
    "RHS_KINDS",
    "SolverSettings",
]
