"""Necessary imports to test the artifact writer."""

import unittest

import numpy as np

from defecthom.models import Field, OperationResult, TorusGrid
from defecthom.services.experiments import ArtifactWriter
from defecthom.services.field_storage.field_storage_service_mock import MockFieldStorageService
from defecthom.services.file_system.file_system_service_mock import MockFileSystemService


class TestArtifactWriter(unittest.TestCase):
    """Artifact writer tests."""

    mock_file_system: MockFileSystemService
    mock_field_storage: MockFieldStorageService
    writer: ArtifactWriter
    field: Field

    def setUp(self):
        self.mock_file_system = MockFileSystemService()
        self.mock_field_storage = MockFieldStorageService()
        self.writer = ArtifactWriter(self.mock_file_system, self.mock_field_storage, "out/run")
        self.field = Field.scalar(TorusGrid(1, 8), np.ones(8), "m_per")

    def test_records_files_in_write_order(self):
        """Records files in write order."""
        # Act
        self.writer.write_json("summary.json", {"a": 1})
        self.writer.write_table("table.csv", ["x"], [[1.0]])
        self.writer.write_field("m_per.dhf", self.field)
        self.writer.write_field_csv("m_per.csv", self.field)
        self.writer.write_json("summary.json", {"a": 2})

        # Assert
        self.assertEqual(
            self.writer.files, ["summary.json", "table.csv", "m_per.dhf", "m_per.csv"]
        )
        self.assertEqual(
            self.mock_file_system.write_json_params[0].path_location, "out/run/summary.json"
        )
        self.assertEqual(self.mock_field_storage.write_table_params[0].header, ["x"])
        self.assertEqual(
            self.mock_field_storage.save_field_params[0].path_location, "out/run/m_per.dhf"
        )
        self.assertEqual(self.mock_field_storage.export_field_csv_params[0].field, self.field)

    def test_failed_write_is_not_recorded(self):
        """Failed write is not recorded."""
        # Arrange
        self.mock_file_system.write_json_result = OperationResult[bool].fail("disk full")

        # Act
        result = self.writer.write_json("summary.json", {})

        # Assert
        self.assertFalse(result.success)
        self.assertEqual(result.message, "writing summary.json: disk full")
        self.assertEqual(self.writer.files, [])

    def test_write_fields_stops_at_the_first_failure(self):
        """Write fields stops at the first failure."""
        # Arrange
        self.mock_field_storage.save_field_result = OperationResult[bool].fail("denied")

        # Act
        result = self.writer.write_fields({"a.dhf": self.field, "b.dhf": self.field})

        # Assert
        self.assertFalse(result.success)
        self.assertEqual(len(self.mock_field_storage.save_field_params), 1)

    def test_write_fields_writes_every_field(self):
        """Write fields writes every field."""
        # Act
        result = self.writer.write_fields({"a.dhf": self.field, "b.dhf": self.field})

        # Assert
        self.assertTrue(result.success)
        self.assertEqual(self.writer.files, ["a.dhf", "b.dhf"])
