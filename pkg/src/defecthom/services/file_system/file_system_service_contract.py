"""Imports for the interface definition."""

from abc import ABC, abstractmethod
from typing import Any

from defecthom.models import OperationResult


class FileSystemServiceContract(ABC):
    """File system operations used for configs, reports, caches and field containers."""

    @abstractmethod
    def read_text(self, path_location: str) -> OperationResult[str]:
        """Reads a UTF-8 text file."""

    @abstractmethod
    def write_text(self, path_location: str, text: str) -> OperationResult[bool]:
        """Writes a UTF-8 text file, creating parent directories."""

    @abstractmethod
    def read_json(self, path_location: str) -> OperationResult[Any]:
        """Reads and decodes a JSON document."""

    @abstractmethod
    def write_json(self, path_location: str, data: Any) -> OperationResult[bool]:
        """Writes a JSON document with sorted keys."""

    @abstractmethod
    def read_bytes(self, path_location: str) -> OperationResult[bytes]:
        """Reads a binary file."""

    @abstractmethod
    def write_bytes(self, path_location: str, data: bytes) -> OperationResult[bool]:
        """Writes a binary file, creating parent directories."""

    @abstractmethod
    def make_dir(self, path_location: str) -> OperationResult[bool]:
        """Creates a directory and its parents."""

    @abstractmethod
    def path_exists(self, path_location: str) -> bool:
        """Checks whether the path exists."""

    @abstractmethod
    def file_hash(self, path_location: str) -> OperationResult[str]:
        """SHA-256 hex digest of a file's content."""
