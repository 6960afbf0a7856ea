"""Necessary imports to implement the Cell Cache Service"""

import hashlib
import json
import os
from typing import Any, Optional

import numpy as np
from packaging.version import InvalidVersion, Version

from defecthom.models import (
    CellSolution,
    CoefficientSet,
    Field,
    OperationResult,
    ResultCode,
    TorusGrid,
    grid_from_object,
)
from defecthom.models.configuration import CacheSettings
from defecthom.services.field_storage import FieldStorageServiceContract
from defecthom.services.file_system import FileSystemServiceContract
from defecthom.services.notifications import NotificationsServiceContract

from .cell_cache_service_contract import CellCacheServiceContract

CACHE_FORMAT_VERSION = "1.0"
CACHE_ROOT_VARIABLE = "DEFECTHOM_CACHE_DIR"
DEFAULT_CACHE_ROOT = os.path.join(os.path.expanduser("~"), ".cache", "defecthom")
ENTRY_FILE = "entry.json"


def resolve_cache_root(settings: CacheSettings) -> str:
    """Configured root, else the environment variable, else the per-user default."""
    if settings.root:
        return settings.root
    return os.environ.get(CACHE_ROOT_VARIABLE) or DEFAULT_CACHE_ROOT


def is_compatible_format(recorded: str) -> bool:
    """Same major version as the current cache format."""
    try:
        return Version(recorded).major == Version(CACHE_FORMAT_VERSION).major
    except InvalidVersion:
        return False


class CellCacheService(CellCacheServiceContract):
    """
    One directory per key holding entry.json and one field container per field.

    entry.json carries the format version, the key material, A*, the drift and the
    residuals; a mismatch in any of them makes the entry a miss.
    """

    def __init__(
        self,
        file_system: FileSystemServiceContract,
        field_storage: FieldStorageServiceContract,
        notifications: NotificationsServiceContract,
        settings: CacheSettings,
    ):
        self.file_system = file_system
        self.field_storage = field_storage
        self.notifications = notifications
        self.settings = settings
        self.root = resolve_cache_root(settings)

    def _key_material(self, coefficients: CoefficientSet, grid: TorusGrid) -> Any:
        return {"coefficients": coefficients.as_object(), "grid": grid.as_object()}

    def key(self, coefficients: CoefficientSet, grid: TorusGrid) -> str:
        canonical = json.dumps(
            self._key_material(coefficients, grid), sort_keys=True, separators=(",", ":")
        )
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def _entry_dir(self, key: str) -> str:
        return os.path.join(self.root, key[:2], key)

    def lookup(
        self, coefficients: CoefficientSet, grid: TorusGrid
    ) -> OperationResult[Optional[CellSolution]]:
        if not self.settings.enabled:
            return OperationResult[Optional[CellSolution]].succeed(None)
        key = self.key(coefficients, grid)
        entry_dir = self._entry_dir(key)
        entry_path = os.path.join(entry_dir, ENTRY_FILE)
        if not self.file_system.path_exists(entry_path):
            self.notifications.info(f"cell cache miss for {key[:12]}")
            return OperationResult[Optional[CellSolution]].succeed(None)

        entry_result = self.file_system.read_json(entry_path)
        if not entry_result.success:
            return self._corrupt(key, entry_result.message)
        solution_result = self._read_entry(entry_dir, entry_result.data, coefficients, grid)
        if not solution_result.success or solution_result.data is None:
            return self._corrupt(key, solution_result.message)
        self.notifications.info(f"cell cache hit for {key[:12]}")
        return OperationResult[Optional[CellSolution]].succeed(solution_result.data)

    def store(
        self, coefficients: CoefficientSet, solution: CellSolution
    ) -> OperationResult[bool]:
        if not self.settings.enabled:
            return OperationResult[bool].succeed(False)
        key = self.key(coefficients, solution.grid)
        entry_dir = self._entry_dir(key)
        dir_result = self.file_system.make_dir(entry_dir)
        if not dir_result.success:
            return dir_result.with_context("cell cache")

        fields = self._fields_of(solution)
        for name, field in fields.items():
            save_result = self.field_storage.save_field(field, os.path.join(entry_dir, name))
            if not save_result.success:
                return save_result.with_context("cell cache")

        entry = {
            "format": CACHE_FORMAT_VERSION,
            "key": self._key_material(coefficients, solution.grid),
            "fields": sorted(fields),
            "correctors": len(solution.w_per),
            "A_star": solution.A_star.tolist(),
            "drift": solution.drift.tolist(),
            "A_star_discrepancy": solution.A_star_discrepancy,
            "ellipticity_margin": solution.ellipticity_margin,
            "residuals": dict(solution.residuals),
        }
        # entry.json is written last; an interrupted store is a miss
        write_result = self.file_system.write_json(os.path.join(entry_dir, ENTRY_FILE), entry)
        if not write_result.success:
            return write_result.with_context("cell cache")
        self.notifications.info(f"cell solution cached under {key[:12]}")
        return OperationResult[bool].succeed(True)

    def _fields_of(self, solution: CellSolution) -> dict[str, Field]:
        fields = {"m_per.dhf": solution.m_per, "B_per.dhf": solution.B_per}
        fields["A_per.dhf"] = solution.A_per
        for index, corrector in enumerate(solution.w_per):
            fields[f"w_per_{index}.dhf"] = corrector
        return fields

    def _read_entry(
        self, entry_dir: str, entry: Any, coefficients: CoefficientSet, grid: TorusGrid
    ) -> OperationResult[CellSolution]:
        try:
            if not is_compatible_format(str(entry["format"])):
                return OperationResult[CellSolution].fail(
                    f"format {entry['format']} is not compatible with {CACHE_FORMAT_VERSION}",
                    ResultCode.STORAGE,
                )
            if entry["key"] != json.loads(json.dumps(self._key_material(coefficients, grid))):
                return OperationResult[CellSolution].fail(
                    "key material does not match", ResultCode.STORAGE
                )
            if grid_from_object(entry["key"]["grid"]) != grid:
                return OperationResult[CellSolution].fail(
                    "grid does not match", ResultCode.STORAGE
                )
            count = int(entry["correctors"])
            A_star = np.array(entry["A_star"], dtype=np.float64)
            drift = np.array(entry["drift"], dtype=np.float64)
            residuals = {str(name): float(value) for name, value in entry["residuals"].items()}
            discrepancy = float(entry["A_star_discrepancy"])
            margin = float(entry["ellipticity_margin"])
        except (KeyError, TypeError, ValueError) as error:
            return OperationResult[CellSolution].fail(
                f"entry is unreadable: {error}", ResultCode.STORAGE
            )

        names = ["m_per.dhf", "B_per.dhf", "A_per.dhf"] + [
            f"w_per_{index}.dhf" for index in range(count)
        ]
        loaded: dict[str, Field] = {}
        for name in names:
            field_result = self.field_storage.load_field(os.path.join(entry_dir, name))
            if not field_result.success or field_result.data is None:
                return field_result.as_fail()
            if field_result.data.grid != grid:
                return OperationResult[CellSolution].fail(
                    f"{name} lives on a different grid", ResultCode.STORAGE
                )
            loaded[name] = field_result.data

        try:
            solution = CellSolution(
                grid=grid,
                m_per=loaded["m_per.dhf"],
                w_per=tuple(loaded[f"w_per_{index}.dhf"] for index in range(count)),
                B_per=loaded["B_per.dhf"],
                A_per=loaded["A_per.dhf"],
                A_star=A_star,
                drift=drift,
                A_star_discrepancy=discrepancy,
                ellipticity_margin=margin,
                residuals=residuals,
            )
        except ValueError as error:
            return OperationResult[CellSolution].fail(str(error), ResultCode.STORAGE)
        return OperationResult[CellSolution].succeed(solution)

    def _corrupt(self, key: str, reason: str) -> OperationResult[Optional[CellSolution]]:
        self.notifications.warning(f"cell cache entry {key[:12]} ignored: {reason}")
        return OperationResult[Optional[CellSolution]].succeed(None)
