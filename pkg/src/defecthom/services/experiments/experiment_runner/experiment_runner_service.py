"""Necessary imports to implement the Experiment Runner Service"""

import hashlib
import json
from importlib.metadata import PackageNotFoundError, version

from defecthom.models import (
    ArtifactManifest,
    CoefficientSet,
    ExperimentOutcome,
    ManifestEntry,
    OperationResult,
)
from defecthom.models.configuration import ExperimentConfig
from defecthom.services.field_storage import FieldStorageServiceContract
from defecthom.services.file_system import FileSystemServiceContract
from defecthom.services.notifications import NotificationsServiceContract

from ..artifact_writer import ArtifactWriter
from ..experiment_tasks import ExperimentTask
from .experiment_runner_service_contract import ExperimentRunnerServiceContract

VERSIONED_PACKAGES = ("defecthom", "numpy", "scipy", "packaging")
CONFIG_FILE = "config.json"
MANIFEST_FILE = "manifest.json"


def config_hash(config: ExperimentConfig) -> str:
    """SHA-256 of the canonical JSON of the configuration."""
    canonical = json.dumps(config.as_object(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def package_versions() -> dict[str, str]:
    """Installed versions of the packages a run depends on."""
    versions: dict[str, str] = {}
    for name in VERSIONED_PACKAGES:
        try:
            versions[name] = version(name)
        except PackageNotFoundError:
            versions[name] = "unknown"
    return versions


class ExperimentRunnerService(ExperimentRunnerServiceContract):
    """Experiment runner service implementation."""

    def __init__(
        self,
        file_system: FileSystemServiceContract,
        field_storage: FieldStorageServiceContract,
        task: ExperimentTask,
        notifications: NotificationsServiceContract,
    ):
        self.file_system = file_system
        self.field_storage = field_storage
        self.task = task
        self.notifications = notifications

    def run(
        self, config: ExperimentConfig, coefficients: CoefficientSet
    ) -> OperationResult[ArtifactManifest]:
        dir_result = self.file_system.make_dir(config.output_dir)
        if not dir_result.success:
            return dir_result.with_context(f"creating {config.output_dir}").as_fail()

        writer = ArtifactWriter(self.file_system, self.field_storage, config.output_dir)
        config_result = writer.write_json(CONFIG_FILE, config.as_object())
        if not config_result.success:
            return config_result.as_fail()

        self.notifications.info(f'running "{config.kind}" for {coefficients.name}')
        outcome_result = self.task.run(config, coefficients, writer)
        outcome = outcome_result.data if outcome_result.data is not None else ExperimentOutcome()
        if not outcome_result.success:
            outcome = ExperimentOutcome(files=list(writer.files))

        manifest = ArtifactManifest(
            kind=config.kind,
            family=coefficients.name,
            config_hash=config_hash(config),
            versions=package_versions(),
            contracts=dict(outcome.contracts),
            residuals={name: float(value) for name, value in outcome.residuals.items()},
        )
        for name in writer.files:
            hash_result = self.file_system.file_hash(writer.path(name))
            if not hash_result.success or hash_result.data is None:
                return hash_result.with_context(f"hashing {name}").as_fail()
            manifest.files.append(ManifestEntry(name, hash_result.data))

        if not outcome_result.success:
            manifest.status = f"failed: {outcome_result.message}"
        elif not manifest.contracts_met:
            manifest.status = "contract violation"

        manifest_result = self.file_system.write_json(
            writer.path(MANIFEST_FILE), manifest.as_object()
        )
        if not manifest_result.success:
            return manifest_result.with_context(f"writing {MANIFEST_FILE}").as_fail()

        if not outcome_result.success:
            self.notifications.error(f'"{config.kind}" failed: {outcome_result.message}')
            return outcome_result.as_fail()
        for name, met in manifest.contracts.items():
            if not met:
                self.notifications.warning(f"contract {name} violated")
        if manifest.contracts_met:
            self.notifications.success(f'"{config.kind}" finished, outputs in {config.output_dir}')
        return OperationResult[ArtifactManifest].succeed(manifest)
