"""Necessary imports to implement the Field Storage Service"""

import csv
import io
import json
from typing import Any

import numpy as np

from defecthom.models import Field, OperationResult, ResultCode, grid_from_object
from defecthom.services.file_system import FileSystemServiceContract

from .field_storage_service_contract import FieldStorageServiceContract

FIELD_MAGIC = b"DHFIELD\x01"
HEADER_LENGTH_BYTES = 8
PAYLOAD_DTYPE = "<f8"


def format_cell(value: Any) -> str:
    """CSV text of one value; floats use the shortest exact representation."""
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


class FieldStorageService(FieldStorageServiceContract):
    """
    Field container layout:

        magic (8 bytes) | header length (8 bytes, little endian) | JSON header | payload

    The payload holds the values in row-major order, components first.
    """

    def __init__(self, file_system: FileSystemServiceContract):
        self.file_system = file_system

    def encode(self, field: Field) -> bytes:
        header = json.dumps(field.as_object(), sort_keys=True).encode("utf-8")
        payload = np.ascontiguousarray(field.values, dtype=PAYLOAD_DTYPE).tobytes(order="C")
        return (
            FIELD_MAGIC + len(header).to_bytes(HEADER_LENGTH_BYTES, "little") + header + payload
        )

    def decode(self, data: bytes) -> OperationResult[Field]:
        prefix = len(FIELD_MAGIC) + HEADER_LENGTH_BYTES
        if len(data) < prefix or data[: len(FIELD_MAGIC)] != FIELD_MAGIC:
            return OperationResult[Field].fail("not a field container", ResultCode.STORAGE)
        length = int.from_bytes(data[len(FIELD_MAGIC) : prefix], "little")
        if prefix + length > len(data):
            return OperationResult[Field].fail(
                "field container header is truncated", ResultCode.STORAGE
            )
        try:
            header = json.loads(data[prefix : prefix + length].decode("utf-8"))
            grid = grid_from_object(header["grid"])
            shape = tuple(int(size) for size in header["shape"])
        except (UnicodeDecodeError, json.JSONDecodeError, KeyError, TypeError, ValueError) as error:
            return OperationResult[Field].fail(
                f"field container header is unreadable: {error}", ResultCode.STORAGE
            )

        payload = data[prefix + length :]
        expected = int(np.prod(shape)) * np.dtype(PAYLOAD_DTYPE).itemsize
        if len(payload) != expected:
            return OperationResult[Field].fail(
                f"field container payload has {len(payload)} bytes, expected {expected}",
                ResultCode.STORAGE,
            )
        values = np.frombuffer(payload, dtype=PAYLOAD_DTYPE).reshape(shape)
        try:
            field = Field(
                grid,
                int(header["rank"]),
                values,
                symmetric=bool(header["symmetric"]),
                skew=bool(header["skew"]),
                label=str(header.get("label", "")),
            )
        except (KeyError, ValueError) as error:
            return OperationResult[Field].fail(
                f"field container is inconsistent: {error}", ResultCode.STORAGE
            )
        return OperationResult[Field].succeed(field)

    def save_field(self, field: Field, path_location: str) -> OperationResult[bool]:
        return self.file_system.write_bytes(path_location, self.encode(field))

    def load_field(self, path_location: str) -> OperationResult[Field]:
        read_result = self.file_system.read_bytes(path_location)
        if not read_result.success or read_result.data is None:
            return read_result.as_fail()
        decode_result = self.decode(read_result.data)
        if not decode_result.success:
            return decode_result.with_context(path_location)
        return decode_result

    def write_table(
        self, path_location: str, header: list[str], rows: list[list[Any]]
    ) -> OperationResult[bool]:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(value) for value in row])
        return self.file_system.write_text(path_location, buffer.getvalue())

    def export_field_csv(self, field: Field, path_location: str) -> OperationResult[bool]:
        if field.rank != 0:
            return OperationResult[bool].fail(
                f"CSV export takes rank 0 fields, got rank {field.rank}", ResultCode.USAGE
            )
        d = field.grid.d
        coordinates = field.grid.coordinates().reshape(d, -1)
        values = field.values.reshape(-1)
        header = [f"x{axis + 1}" for axis in range(d)] + [field.label or "value"]
        rows = [list(coordinates[:, index]) + [values[index]] for index in range(values.size)]
        return self.write_table(path_location, header, rows)
