"""Imports for the interface definition."""

from abc import ABC, abstractmethod
from typing import Any

from defecthom.models import Field, OperationResult


class FieldStorageServiceContract(ABC):
    """Field container codec and CSV export of fields and tables."""

    @abstractmethod
    def encode(self, field: Field) -> bytes:
        """Magic, header length, JSON header and little-endian float64 payload."""

    @abstractmethod
    def decode(self, data: bytes) -> OperationResult[Field]:
        """Field from container bytes; bad magic, header or payload size fail."""

    @abstractmethod
    def save_field(self, field: Field, path_location: str) -> OperationResult[bool]:
        """Writes the field container to a file."""

    @abstractmethod
    def load_field(self, path_location: str) -> OperationResult[Field]:
        """Reads a field container file."""

    @abstractmethod
    def write_table(
        self, path_location: str, header: list[str], rows: list[list[Any]]
    ) -> OperationResult[bool]:
        """Writes a CSV table with round-trip float formatting."""

    @abstractmethod
    def export_field_csv(self, field: Field, path_location: str) -> OperationResult[bool]:
        """Writes node coordinates and values of a rank 0 field as CSV."""
