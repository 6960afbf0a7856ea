"""Artifact manifest written next to every run's outputs."""

from dataclasses import dataclass, field
from typing import Any


@dataclass
class ManifestEntry:
    """One produced file."""

    path: str
    sha256: str

    def as_object(self) -> Any:
        """Converts class to object"""
        return {"path": self.path, "sha256": self.sha256}


@dataclass
class ArtifactManifest:
    """Inputs hash, library versions, outputs, contract verdicts and residuals of a run."""

    kind: str
    family: str
    config_hash: str
    versions: dict[str, str]
    files: list[ManifestEntry] = field(default_factory=list)
    contracts: dict[str, bool] = field(default_factory=dict)
    residuals: dict[str, float] = field(default_factory=dict)
    status: str = "ok"

    @property
    def contracts_met(self) -> bool:
        """True when every recorded contract holds."""
        return all(self.contracts.values())

    def as_object(self) -> Any:
        """Converts class to object"""
        return {
            "kind": self.kind,
            "family": self.family,
            "config_hash": self.config_hash,
            "versions": dict(self.versions),
            "files": [entry.as_object() for entry in self.files],
            "contracts": dict(self.contracts),
            "residuals": dict(self.residuals),
            "status": self.status,
        }

    @classmethod
    def from_object(cls, obj: Any):
        """Converts object to the class"""
        return ArtifactManifest(
            kind=obj["kind"],
            family=obj["family"],
            config_hash=obj["config_hash"],
            versions=dict(obj["versions"]),
            files=[ManifestEntry(item["path"], item["sha256"]) for item in obj["files"]],
            contracts=dict(obj["contracts"]),
            residuals=dict(obj["residuals"]),
            status=obj["status"],
        )


@dataclass
class ExperimentOutcome:
    """What an experiment produced: written files, contract verdicts, residuals and a summary."""

    files: list[str] = field(default_factory=list)
    contracts: dict[str, bool] = field(default_factory=dict)
    residuals: dict[str, float] = field(default_factory=dict)
    summary: dict[str, Any] = field(default_factory=dict)

    @property
    def contracts_met(self) -> bool:
        """True when every recorded contract holds."""
        return all(self.contracts.values())
