"""Mock Field Storage Service - returns preset results and records calls."""

from dataclasses import dataclass
from typing import Any, Dict

from defecthom.models import Field, OperationResult

from .field_storage_service_contract import FieldStorageServiceContract


@dataclass
class SaveFieldParams:
    """Params of the save_field method."""

    field: Field
    path_location: str


@dataclass
class WriteTableParams:
    """Params of the write_table method."""

    path_location: str
    header: list[str]
    rows: list[list[Any]]


class MockFieldStorageService(FieldStorageServiceContract):
    """Every operation answers with its preset *_result attribute."""

    def __init__(self):
        self.encode_params: list[Field] = []
        self.encode_result = b""
        self.decode_params: list[bytes] = []
        self.decode_result = OperationResult[Field].fail("no preset field")
        self.save_field_params: list[SaveFieldParams] = []
        self.save_field_result = OperationResult[bool].succeed(True)
        self.load_field_params: list[str] = []
        self.load_field_result = OperationResult[Field].fail("no preset field")
        self.load_field_result_map: Dict[str, OperationResult[Field]] = {}
        self.write_table_params: list[WriteTableParams] = []
        self.write_table_result = OperationResult[bool].succeed(True)
        self.export_field_csv_params: list[SaveFieldParams] = []
        self.export_field_csv_result = OperationResult[bool].succeed(True)

    def encode(self, field: Field) -> bytes:
        self.encode_params.append(field)
        return self.encode_result

    def decode(self, data: bytes) -> OperationResult[Field]:
        self.decode_params.append(data)
        return self.decode_result

    def save_field(self, field: Field, path_location: str) -> OperationResult[bool]:
        self.save_field_params.append(SaveFieldParams(field, path_location))
        return self.save_field_result

    def load_field(self, path_location: str) -> OperationResult[Field]:
        self.load_field_params.append(path_location)
        if path_location in self.load_field_result_map:
            return self.load_field_result_map[path_location]
        return self.load_field_result

    def write_table(
        self, path_location: str, header: list[str], rows: list[list[Any]]
    ) -> OperationResult[bool]:
        self.write_table_params.append(WriteTableParams(path_location, header, rows))
        return self.write_table_result

    def export_field_csv(self, field: Field, path_location: str) -> OperationResult[bool]:
        self.export_field_csv_params.append(SaveFieldParams(field, path_location))
        return self.export_field_csv_result
