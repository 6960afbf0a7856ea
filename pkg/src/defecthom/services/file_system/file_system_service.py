"""Necessary imports to implement the File System Service"""

import hashlib
import json
from pathlib import Path
from typing import Any

from defecthom.models import OperationResult, ResultCode

from .file_system_service_contract import FileSystemServiceContract


class FileSystemService(FileSystemServiceContract):
    """File System Service Implementation."""

    def read_text(self, path_location: str) -> OperationResult[str]:
        check_result = self._check_path(path_location)
        if not check_result.success:
            return check_result.as_fail()
        path = self._get_path(path_location)

        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as error:
            return OperationResult[str].fail(
                f"Failed to read text from {path_location}: {error}", ResultCode.STORAGE
            )

        return OperationResult[str].succeed(text)

    def write_text(self, path_location: str, text: str) -> OperationResult[bool]:
        prepare_result = self._prepare_file(path_location)
        if not prepare_result.success:
            return prepare_result

        try:
            self._get_path(path_location).write_text(text, encoding="utf-8")
        except OSError as error:
            return OperationResult[bool].fail(
                f"Failed to write text into {path_location}: {error}", ResultCode.STORAGE
            )

        return OperationResult[bool].succeed(True)

    def read_json(self, path_location: str) -> OperationResult[Any]:
        read_result = self.read_text(path_location)
        if not read_result.success or read_result.data is None:
            return read_result.as_fail()

        try:
            data = json.loads(read_result.data)
        except json.JSONDecodeError as error:
            return OperationResult[Any].fail(
                f"Failed to decode JSON from {path_location}: {error}", ResultCode.STORAGE
            )

        return OperationResult[Any].succeed(data)

    def write_json(self, path_location: str, data: Any) -> OperationResult[bool]:
        try:
            text = json.dumps(data, indent=2, sort_keys=True)
        except (TypeError, ValueError):
            return OperationResult[bool].fail(
                f"Failed to save JSON data into the path: {path_location}", ResultCode.STORAGE
            )

        return self.write_text(path_location, text + "\n")

    def read_bytes(self, path_location: str) -> OperationResult[bytes]:
        check_result = self._check_path(path_location)
        if not check_result.success:
            return check_result.as_fail()

        try:
            data = self._get_path(path_location).read_bytes()
        except OSError as error:
            return OperationResult[bytes].fail(
                f"Failed to read {path_location}: {error}", ResultCode.STORAGE
            )

        return OperationResult[bytes].succeed(data)

    def write_bytes(self, path_location: str, data: bytes) -> OperationResult[bool]:
        prepare_result = self._prepare_file(path_location)
        if not prepare_result.success:
            return prepare_result

        try:
            self._get_path(path_location).write_bytes(data)
        except OSError as error:
            return OperationResult[bool].fail(
                f"Failed to write {path_location}: {error}", ResultCode.STORAGE
            )

        return OperationResult[bool].succeed(True)

    def make_dir(self, path_location: str) -> OperationResult[bool]:
        path = self._get_path(path_location)
        if path.exists():
            if path.is_dir():
                return OperationResult[bool].succeed(True)
            return OperationResult[bool].fail(
                f"Path {path_location} is file, so can not make the directory out of it.",
                ResultCode.STORAGE,
            )

        try:
            path.mkdir(parents=True, exist_ok=True)
        except OSError as error:
            return OperationResult[bool].fail(
                f"Failed to create directory {path_location}: {error}", ResultCode.STORAGE
            )

        return OperationResult[bool].succeed(True)

    def path_exists(self, path_location: str) -> bool:
        return self._get_path(path_location).exists()

    def file_hash(self, path_location: str) -> OperationResult[str]:
        read_result = self.read_bytes(path_location)
        if not read_result.success or read_result.data is None:
            return read_result.as_fail()

        return OperationResult[str].succeed(hashlib.sha256(read_result.data).hexdigest())

    def _prepare_file(self, path_location: str) -> OperationResult[bool]:
        path = self._get_path(path_location)
        if path.exists() and not path.is_file():
            return OperationResult[bool].fail(
                f"Path {path_location} is not a file", ResultCode.STORAGE
            )

        if not path.exists():
            return self.make_dir(path.parent.as_posix())

        return OperationResult[bool].succeed(True)

    def _get_path(self, path_location: str) -> Path:
        return Path(path_location)

    def _check_path(self, path_location: str) -> OperationResult[bool]:
        path = self._get_path(path_location)
        if not path.exists():
            return OperationResult[bool].fail(
                f"Path {path_location} does not exist", ResultCode.STORAGE
            )

        if not path.is_file():
            return OperationResult[bool].fail(
                f"Path {path_location} is not a file", ResultCode.STORAGE
            )

        return OperationResult[bool].succeed(True)
