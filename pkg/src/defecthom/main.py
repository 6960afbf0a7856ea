"""Command line entry point: wires the services and dispatches the verbs."""

import argparse

from defecthom import __version__
from defecthom.commands import RunCommand, ValidateCommand
from defecthom.models.configuration import ConfigOverrides, ExperimentConfig
from defecthom.services.cache import CellCacheService
from defecthom.services.cell import CellService
from defecthom.services.coefficients import CoefficientCatalogService
from defecthom.services.configuration import ExperimentConfigReaderService
from defecthom.services.defect import DefectService
from defecthom.services.divform import DivFormService
from defecthom.services.experiments import (
    CellExperimentTask,
    CellProvider,
    ConvergeExperimentTask,
    DefectExperimentTask,
    DivFormExperimentTask,
    ExperimentRunnerService,
    GenericExperimentTask,
    ProbeExperimentTask,
    ScalingExperimentTask,
    Validate1DExperimentTask,
)
from defecthom.services.field_storage import FieldStorageService
from defecthom.services.fields import FieldCalculusService
from defecthom.services.file_system import FileSystemService
from defecthom.services.linear_solver import LinearSolverService
from defecthom.services.multiscale import MultiscaleService
from defecthom.services.notifications import (
    NotificationsService,
    NotificationsServiceContract,
    QuietNotificationsService,
)
from defecthom.services.oracle1d import OracleService


def build_runner(
    config: ExperimentConfig, notifications: NotificationsServiceContract
) -> ExperimentRunnerService:
    """Runner with the solver and cache settings of one configuration."""
    file_system = FileSystemService()
    field_storage = FieldStorageService(file_system)
    field_calculus = FieldCalculusService()
    oracle = OracleService()
    linear_solver = LinearSolverService(notifications, config.solver)

    cell = CellService(notifications, linear_solver, field_calculus, config.solver)
    defect = DefectService(notifications, linear_solver, field_calculus, config.solver)
    divform = DivFormService(notifications, linear_solver, field_calculus, config.solver)
    multiscale = MultiscaleService(notifications, linear_solver, field_calculus, config.solver)
    cache = CellCacheService(file_system, field_storage, notifications, config.cache)
    cell_provider = CellProvider(cell, cache, notifications)

    task = GenericExperimentTask(
        {
            "cell": CellExperimentTask(cell_provider),
            "defect": DefectExperimentTask(cell_provider, defect, oracle),
            "divform": DivFormExperimentTask(cell_provider, defect, divform),
            "converge": ConvergeExperimentTask(cell_provider, defect, multiscale),
            "scaling": ScalingExperimentTask(cell_provider, field_calculus, multiscale),
            "validate-1d": Validate1DExperimentTask(
                cell_provider, defect, field_calculus, oracle, notifications
            ),
            "probe": ProbeExperimentTask(defect),
        }
    )
    return ExperimentRunnerService(file_system, field_storage, task, notifications)


def build_parser() -> argparse.ArgumentParser:
    """Parser of the run and validate verbs."""
    parser = argparse.ArgumentParser(
        prog="defecthom",
        description="Invariant measures, correctors and homogenized coefficients "
        "of periodic media with localized defects.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="Suppress progress messages")
    verbs = parser.add_subparsers(dest="verb", required=True)

    run = verbs.add_parser("run", parents=[common], help="Run the experiment of a configuration")
    run.add_argument("config", help="Path of the JSON experiment configuration")
    run.add_argument("--kind", default=None, help="Experiment kind replacing the configured one")
    run.add_argument("--out", default=None, help="Output directory replacing the configured one")
    run.add_argument("--no-cache", action="store_true", help="Solve cell problems afresh")

    validate = verbs.add_parser(
        "validate", parents=[common], help="Check a configuration without solving"
    )
    validate.add_argument("config", help="Path of the JSON experiment configuration")
    return parser


def main(argv: list[str] | None = None) -> int:
    """Entry point; returns the process exit status."""
    args = build_parser().parse_args(argv)
    notifications = QuietNotificationsService() if args.quiet else NotificationsService()

    file_system = FileSystemService()
    catalog = CoefficientCatalogService(notifications, FieldCalculusService())
    config_reader = ExperimentConfigReaderService(file_system, catalog)

    if args.verb == "validate":
        return ValidateCommand(config_reader, notifications).execute(args.config)

    overrides = ConfigOverrides(kind=args.kind, output_dir=args.out, no_cache=args.no_cache)
    command = RunCommand(
        config_reader, lambda config: build_runner(config, notifications), notifications
    )
    return command.execute(args.config, overrides)


if __name__ == "__main__":
    raise SystemExit(main())
