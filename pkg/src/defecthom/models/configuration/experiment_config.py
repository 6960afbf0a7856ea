"""Necessary imports."""

import copy
from dataclasses import dataclass
from typing import Any, Optional

EXPERIMENT_KINDS = ("cell", "defect", "divform", "converge", "scaling", "validate-1d", "probe")

EXPERIMENT_SETTINGS: dict[str, tuple[str, ...]] = {
    "cell": (),
    "defect": ("convolution", "decay_stability"),
    "divform": ("identity_test_width",),
    "converge": ("eps_list", "rhs"),
    "scaling": ("eps_list", "beta", "rhs"),
    "validate-1d": (),
    "probe": ("q", "rhs_widths"),
}
DEFAULT_EPS_LIST = (0.25, 0.125, 0.0625, 0.03125)
RHS_KINDS = ("sine", "one")


@dataclass
class DomainSettings:
    """Bounded domain of the oscillatory problems."""

    lower: float
    upper: float
    n: int

    @classmethod
    def default(cls):
        """Helper method to instantiate the data model easier."""
        return DomainSettings(lower=0.0, upper=1.0, n=512)

    def as_object(self) -> Any:
        """Converts class to object"""
        return {"lower": self.lower, "upper": self.upper, "n": self.n}

    @classmethod
    def from_object(cls, obj: Any):
        """Converts object to the class"""
        data = DomainSettings.default()
        data.lower = obj.get("lower", data.lower)
        data.upper = obj.get("upper", data.upper)
        data.n = obj.get("n", data.n)
        return data


@dataclass
class GridSettings:
    """Grid resolutions."""

    n_cell: int
    L: int
    n_box: int
    domain: DomainSettings

    @classmethod
    def default(cls):
        """Helper method to instantiate the data model easier."""
        return GridSettings(n_cell=64, L=8, n_box=256, domain=DomainSettings.default())

    def as_object(self) -> Any:
        """Converts class to object"""
        return {
            "n_cell": self.n_cell,
            "L": self.L,
            "n_box": self.n_box,
            "domain": self.domain.as_object(),
        }

    @classmethod
    def from_object(cls, obj: Any):
        """Converts object to the class"""
        data = GridSettings.default()
        data.n_cell = obj.get("n_cell", data.n_cell)
        data.L = obj.get("L", data.L)
        data.n_box = obj.get("n_box", data.n_box)
        if "domain" in obj:
            data.domain = DomainSettings.from_object(obj["domain"])
        return data


@dataclass
class SolverSettings:
    """Linear solver tolerances and parallelism."""

    tolerance: float
    max_iterations: int
    direct_limit: int
    workers: int

    @classmethod
    def default(cls):
        """Helper method to instantiate the data model easier."""
        return SolverSettings(tolerance=1e-10, max_iterations=2000, direct_limit=60000, workers=1)

    def as_object(self) -> Any:
        """Converts class to object"""
        return {
            "tolerance": self.tolerance,
            "max_iterations": self.max_iterations,
            "direct_limit": self.direct_limit,
            "workers": self.workers,
        }

    @classmethod
    def from_object(cls, obj: Any):
        """Converts object to the class"""
        data = SolverSettings.default()
        data.tolerance = obj.get("tolerance", data.tolerance)
        data.max_iterations = obj.get("max_iterations", data.max_iterations)
        data.direct_limit = obj.get("direct_limit", data.direct_limit)
        data.workers = obj.get("workers", data.workers)
        return data


@dataclass
class CacheSettings:
    """Cell solution cache policy."""

    enabled: bool
    root: Optional[str]

    @classmethod
    def default(cls):
        """Helper method to instantiate the data model easier."""
        return CacheSettings(enabled=True, root=None)

    def as_object(self) -> Any:
        """Converts class to object"""
        return {"enabled": self.enabled, "root": self.root}

    @classmethod
    def from_object(cls, obj: Any):
        """Converts object to the class"""
        data = CacheSettings.default()
        data.enabled = obj.get("enabled", data.enabled)
        data.root = obj.get("root", data.root)
        return data


@dataclass
class ExperimentConfig:
    """Experiment configuration data model."""

    kind: str
    family: str
    params: dict[str, Any]
    grid: GridSettings
    solver: SolverSettings
    experiment: dict[str, Any]
    output_dir: str
    cache: CacheSettings

    @classmethod
    def default(cls):
        """Helper method to instantiate the data model easier."""
        return ExperimentConfig(
            kind="cell",
            family="identity",
            params={},
            grid=GridSettings.default(),
            solver=SolverSettings.default(),
            experiment={},
            output_dir="out",
            cache=CacheSettings.default(),
        )

    def setting(self, name: str, default: Any) -> Any:
        """Kind-specific experiment setting with its default."""
        return copy.deepcopy(self.experiment.get(name, default))

    def coefficient_section(self) -> Any:
        """The part of the configuration that identifies the coefficients."""
        return {"family": self.family, "params": copy.deepcopy(self.params)}

    def as_object(self) -> Any:
        """Converts class to object"""
        return {
            "kind": self.kind,
            "family": self.family,
            "params": copy.deepcopy(self.params),
            "grid": self.grid.as_object(),
            "solver": self.solver.as_object(),
            "experiment": copy.deepcopy(self.experiment),
            "output_dir": self.output_dir,
            "cache": self.cache.as_object(),
        }

    @classmethod
    def from_object(cls, obj: Any):
        """Converts object to the class"""
        data = ExperimentConfig.default()
        data.kind = obj["kind"]
        data.family = obj["family"]
        data.params = copy.deepcopy(obj.get("params", {}))
        data.grid = GridSettings.from_object(obj.get("grid", {}))
        data.solver = SolverSettings.from_object(obj.get("solver", {}))
        data.experiment = copy.deepcopy(obj.get("experiment", {}))
        data.output_dir = obj.get("output_dir", data.output_dir)
        data.cache = CacheSettings.from_object(obj.get("cache", {}))
        return data


@dataclass
class ConfigOverrides:
    """Command line values that replace configuration entries."""

    kind: Optional[str] = None
    output_dir: Optional[str] = None
    no_cache: bool = False

    def apply(self, config: ExperimentConfig) -> ExperimentConfig:
        """Copy of the configuration with the overrides applied."""
        data = ExperimentConfig.from_object(config.as_object())
        if self.kind is not None:
            data.kind = self.kind
        if self.output_dir is not None:
            data.output_dir = self.output_dir
        if self.no_cache:
            data.cache.enabled = False
        return data
