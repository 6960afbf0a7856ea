"""Necessary imports"""

from typing import Any

from defecthom.models import BoxGrid, CoefficientSet, OperationResult, ResultCode, TorusGrid
from defecthom.models.configuration import (
    EXPERIMENT_KINDS,
    EXPERIMENT_SETTINGS,
    ConfigOverrides,
    ExperimentConfig,
)
from defecthom.services.coefficients import CoefficientCatalogServiceContract
from defecthom.services.file_system import FileSystemServiceContract

from ..problems import check_eps_problem
from .experiment_config_reader_service_contract import ExperimentConfigReaderServiceContract

BOX_KINDS = ("defect", "divform", "probe", "validate-1d")
MULTISCALE_KINDS = ("converge", "scaling")


class ExperimentConfigReaderService(ExperimentConfigReaderServiceContract):
    """Experiment configuration reader service implementation."""

    def __init__(
        self,
        file_system: FileSystemServiceContract,
        catalog: CoefficientCatalogServiceContract,
    ):
        self.file_system = file_system
        self.catalog = catalog

    def read(
        self, path_location: str, overrides: ConfigOverrides | None = None
    ) -> OperationResult[ExperimentConfig]:
        read_result = self.file_system.read_json(path_location)
        if not read_result.success:
            return OperationResult[ExperimentConfig].fail(
                f"Cannot read configuration {path_location}: {read_result.message}",
                ResultCode.USAGE,
            )
        data = read_result.data
        if not isinstance(data, dict):
            return OperationResult[ExperimentConfig].fail(
                f"Configuration {path_location} must be a JSON object", ResultCode.USAGE
            )
        try:
            config = ExperimentConfig.from_object(data)
        except KeyError as error:
            return OperationResult[ExperimentConfig].fail(
                f"Configuration {path_location} misses the required entry {error}",
                ResultCode.USAGE,
            )
        except (AttributeError, TypeError) as error:
            return OperationResult[ExperimentConfig].fail(
                f"Configuration {path_location} is malformed: {error}", ResultCode.USAGE
            )
        if overrides is not None:
            config = overrides.apply(config)
        return OperationResult[ExperimentConfig].succeed(config)

    def validate(self, config: ExperimentConfig) -> OperationResult[CoefficientSet]:
        if config.kind not in EXPERIMENT_KINDS:
            return self._usage(
                f'Unknown experiment kind "{config.kind}"; known: {", ".join(EXPERIMENT_KINDS)}'
            )
        unknown = sorted(set(config.experiment) - set(EXPERIMENT_SETTINGS[config.kind]))
        if unknown:
            return self._usage(
                f'Experiment settings {", ".join(unknown)} do not apply to kind "{config.kind}"'
            )
        solver = config.solver
        if not (solver.tolerance > 0.0 and solver.max_iterations >= 1 and solver.workers >= 1):
            return self._usage(
                "Solver settings need tolerance > 0, max_iterations >= 1 and workers >= 1"
            )

        build_result = self.catalog.build_family(config.family, config.params)
        if not build_result.success or build_result.data is None:
            return build_result.as_fail()
        coefficients = build_result.data
        d = coefficients.d

        hypothesis_result = self._check_integrability(coefficients)
        if not hypothesis_result.success:
            return hypothesis_result.as_fail()

        try:
            TorusGrid(d, config.grid.n_cell)
            if config.kind in BOX_KINDS:
                BoxGrid(d, config.grid.L, config.grid.n_box)
            if config.kind in MULTISCALE_KINDS:
                check_eps_problem(config, d)
        except (TypeError, ValueError) as error:
            return self._usage(f"Grid settings are inconsistent: {error}")

        if config.kind == "scaling":
            beta = config.setting("beta", 2.0)
            if not isinstance(beta, (int, float)) or beta < 1.0:
                return self._usage(f"Hessian norm exponent beta must be >= 1, got {beta}")
        if config.kind == "probe":
            probe_result = self._check_probe(config, coefficients)
            if not probe_result.success:
                return probe_result.as_fail()
        if config.kind == "validate-1d" and d != 1:
            return self._usage(
                f'Kind "validate-1d" compares with one dimensional closed forms, '
                f'"{config.family}" has d = {d}'
            )
        return OperationResult[CoefficientSet].succeed(coefficients)

    def _check_integrability(self, coefficients: CoefficientSet) -> OperationResult[bool]:
        d = coefficients.d
        if not coefficients.has_defect or coefficients.outside_hypothesis or d == 1:
            return OperationResult[bool].succeed(True)
        for name, value in (("r", coefficients.r), ("s", coefficients.s)):
            if not 1.0 <= value < d:
                return self._usage(
                    f"{name} = {value:g} outside [1, d) with d = {d} violates the defect "
                    f"integrability hypothesis of the corrector estimate"
                ).as_fail()
        return OperationResult[bool].succeed(True)

    def _check_probe(
        self, config: ExperimentConfig, coefficients: CoefficientSet
    ) -> OperationResult[bool]:
        d = coefficients.d
        floor = max(coefficients.r, coefficients.s)
        q: Any = config.setting("q", floor)
        if not isinstance(q, (int, float)) or not 1.0 <= q < d:
            return self._usage(
                f"Probe exponent q = {q} outside [1, d) with d = {d}: the Sobolev exponent "
                f"1/q* = 1/q - 1/d must be positive"
            ).as_fail()
        if q < floor:
            return self._usage(
                f"Probe exponent q = {q:g} is below max(r, s) = {floor:g}: the defect data "
                f"is only controlled in L^q for q >= max(r, s)"
            ).as_fail()
        widths = config.setting("rhs_widths", [0.5, 1.0])
        numeric = isinstance(widths, list) and all(isinstance(w, (int, float)) for w in widths)
        if not numeric or not widths or min(widths) <= 0.0:
            return self._usage(f"Probe rhs_widths must be positive widths, got {widths}").as_fail()
        return OperationResult[bool].succeed(True)

    def _usage(self, message: str) -> OperationResult[CoefficientSet]:
        return OperationResult[CoefficientSet].fail(message, ResultCode.USAGE)
