"""Writes run outputs under one directory and remembers what it wrote."""

import os
from typing import Any

from defecthom.models import Field, OperationResult
from defecthom.services.field_storage import FieldStorageServiceContract
from defecthom.services.file_system import FileSystemServiceContract


class ArtifactWriter:
    """File names are relative to the output directory and recorded in write order."""

    def __init__(
        self,
        file_system: FileSystemServiceContract,
        field_storage: FieldStorageServiceContract,
        output_dir: str,
    ):
        self.file_system = file_system
        self.field_storage = field_storage
        self.output_dir = output_dir
        self.files: list[str] = []

    def path(self, name: str) -> str:
        """Location of an output file."""
        return os.path.join(self.output_dir, name)

    def write_json(self, name: str, data: Any) -> OperationResult[bool]:
        """JSON summary."""
        return self._recorded(name, self.file_system.write_json(self.path(name), data))

    def write_table(
        self, name: str, header: list[str], rows: list[list[Any]]
    ) -> OperationResult[bool]:
        """CSV table."""
        return self._recorded(name, self.field_storage.write_table(self.path(name), header, rows))

    def write_field(self, name: str, field: Field) -> OperationResult[bool]:
        """Field container."""
        return self._recorded(name, self.field_storage.save_field(field, self.path(name)))

    def write_field_csv(self, name: str, field: Field) -> OperationResult[bool]:
        """Coordinates and values of a scalar field as CSV."""
        return self._recorded(name, self.field_storage.export_field_csv(field, self.path(name)))

    def write_fields(self, fields: dict[str, Field]) -> OperationResult[bool]:
        """Several field containers; stops at the first failure."""
        for name, field in fields.items():
            result = self.write_field(name, field)
            if not result.success:
                return result
        return OperationResult[bool].succeed(True)

    def _recorded(self, name: str, result: OperationResult[bool]) -> OperationResult[bool]:
        if not result.success:
            return result.with_context(f"writing {name}")
        if name not in self.files:
            self.files.append(name)
        return result
