"""Necessary imports for the field storage tests."""

import unittest

import numpy as np

from defecthom.models import BoxGrid, Field, OperationResult, ResultCode, TorusGrid
from defecthom.services.field_storage import FieldStorageService
from defecthom.services.field_storage.field_storage_service import FIELD_MAGIC
from defecthom.services.file_system.file_system_service_mock import MockFileSystemService


class TestFieldStorageService(unittest.TestCase):
    """Field container and CSV table tests."""

    mock_file_system: MockFileSystemService
    service: FieldStorageService
    field: Field

    def setUp(self):
        self.mock_file_system = MockFileSystemService()
        self.service = FieldStorageService(self.mock_file_system)
        rng = np.random.default_rng(3)
        grid = TorusGrid(2, 8)
        self.field = Field.skew_part(grid, rng.standard_normal((2, 2, 8, 8)), "B_per")

    def test_encoded_field_decodes_bit_identical(self):
        """Encoded field decodes bit identical."""
        # Act
        result = self.service.decode(self.service.encode(self.field))

        # Assert
        self.assertTrue(result.success)
        decoded = result.data
        self.assertEqual(decoded.grid, self.field.grid)
        self.assertTrue(decoded.skew)
        self.assertEqual(decoded.label, "B_per")
        self.assertEqual(decoded.values.tobytes(), self.field.values.tobytes())

    def test_encoding_starts_with_magic(self):
        """Encoding starts with magic."""
        # Act
        data = self.service.encode(self.field)

        # Assert
        self.assertTrue(data.startswith(FIELD_MAGIC))

    def test_rejects_foreign_bytes(self):
        """Rejects foreign bytes."""
        # Act
        result = self.service.decode(b"PK\x03\x04 something else")

        # Assert
        self.assertEqual(
            result, OperationResult[Field].fail("not a field container", ResultCode.STORAGE)
        )

    def test_rejects_truncated_payload(self):
        """Rejects truncated payload."""
        # Arrange
        data = self.service.encode(self.field)[:-8]

        # Act
        result = self.service.decode(data)

        # Assert
        self.assertFalse(result.success)
        self.assertEqual(result.code, ResultCode.STORAGE)
        self.assertIn("payload", result.message)

    def test_rejects_truncated_header(self):
        """Rejects truncated header."""
        # Arrange
        data = self.service.encode(self.field)[:20]

        # Act
        result = self.service.decode(data)

        # Assert
        self.assertFalse(result.success)
        self.assertIn("truncated", result.message)

    def test_saves_through_the_file_system(self):
        """Saves through the file system."""
        # Act
        self.service.save_field(self.field, "out/B_per.dhf")

        # Assert
        params = self.mock_file_system.write_bytes_params
        self.assertEqual(len(params), 1)
        self.assertEqual(params[0].path_location, "out/B_per.dhf")
        self.assertEqual(params[0].data, self.service.encode(self.field))

    def test_loads_through_the_file_system(self):
        """Loads through the file system."""
        # Arrange
        self.mock_file_system.read_bytes_result = OperationResult[bytes].succeed(
            self.service.encode(self.field)
        )

        # Act
        result = self.service.load_field("out/B_per.dhf")

        # Assert
        self.assertTrue(result.success)
        np.testing.assert_array_equal(result.data.values, self.field.values)

    def test_load_failure_names_the_path(self):
        """Load failure names the path."""
        # Arrange
        self.mock_file_system.read_bytes_result = OperationResult[bytes].succeed(b"junk")

        # Act
        result = self.service.load_field("out/B_per.dhf")

        # Assert
        self.assertEqual(result.message, "out/B_per.dhf: not a field container")

    def test_writes_tables_with_exact_floats(self):
        """Writes tables with exact floats."""
        # Act
        self.service.write_table("t.csv", ["eps", "error"], [[0.25, 0.1 + 0.2], [0.125, 3]])

        # Assert
        text = self.mock_file_system.write_text_params[0].text
        self.assertEqual(text, "eps,error\n0.25,0.30000000000000004\n0.125,3\n")

    def test_exports_scalar_fields_with_coordinates(self):
        """Exports scalar fields with coordinates."""
        # Arrange
        grid = BoxGrid(1, 1, 8)
        field = Field.scalar(grid, grid.axis() ** 2, "m_tilde")

        # Act
        result = self.service.export_field_csv(field, "m.csv")

        # Assert
        self.assertTrue(result.success)
        lines = self.mock_file_system.write_text_params[0].text.splitlines()
        self.assertEqual(lines[0], "x1,m_tilde")
        self.assertEqual(lines[1], "-1.0,1.0")
        self.assertEqual(len(lines), 10)

    def test_refuses_to_export_vector_fields(self):
        """Refuses to export vector fields."""
        # Arrange
        field = Field.zeros(TorusGrid(1, 8), 1)

        # Act
        result = self.service.export_field_csv(field, "b.csv")

        # Assert
        self.assertFalse(result.success)
        self.assertEqual(result.code, ResultCode.USAGE)
