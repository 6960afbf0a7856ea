"""
Unit tests for the FileSystemService class.

Every test works inside its own temporary directory.
"""

import hashlib
import os
import tempfile
import unittest

from defecthom.models import ResultCode
from defecthom.services.file_system import FileSystemService


class TestFileSystemService(unittest.TestCase):
    """File system service tests."""

    service: FileSystemService
    root: str

    def setUp(self):
        self.service = FileSystemService()
        self._directory = tempfile.TemporaryDirectory()
        self.root = self._directory.name

    def tearDown(self):
        self._directory.cleanup()

    def test_writes_text_creating_parent_directories(self):
        """Writes text creating parent directories."""
        # Arrange
        path = os.path.join(self.root, "nested", "deeper", "note.txt")

        # Act
        write_result = self.service.write_text(path, "hello")
        read_result = self.service.read_text(path)

        # Assert
        self.assertTrue(write_result.success)
        self.assertEqual(read_result.data, "hello")

    def test_fails_reading_missing_file_with_storage_code(self):
        """Fails reading missing file with storage code."""
        # Act
        result = self.service.read_text(os.path.join(self.root, "missing.txt"))

        # Assert
        self.assertFalse(result.success)
        self.assertEqual(result.code, ResultCode.STORAGE)
        self.assertIn("does not exist", result.message)

    def test_fails_reading_a_directory(self):
        """Fails reading a directory."""
        # Act
        result = self.service.read_bytes(self.root)

        # Assert
        self.assertFalse(result.success)
        self.assertIn("is not a file", result.message)

    def test_writes_sorted_indented_json(self):
        """Writes sorted indented JSON."""
        # Arrange
        path = os.path.join(self.root, "data.json")

        # Act
        self.service.write_json(path, {"b": 1, "a": [1, 2]})
        text = self.service.read_text(path).data
        data = self.service.read_json(path).data

        # Assert
        self.assertTrue(text.startswith('{\n  "a"'))
        self.assertTrue(text.endswith("}\n"))
        self.assertEqual(data, {"a": [1, 2], "b": 1})

    def test_fails_writing_unserializable_json(self):
        """Fails writing unserializable JSON."""
        # Act
        result = self.service.write_json(os.path.join(self.root, "bad.json"), {"a": object()})

        # Assert
        self.assertFalse(result.success)
        self.assertEqual(result.code, ResultCode.STORAGE)

    def test_fails_decoding_malformed_json(self):
        """Fails decoding malformed JSON."""
        # Arrange
        path = os.path.join(self.root, "broken.json")
        self.service.write_text(path, "{not json")

        # Act
        result = self.service.read_json(path)

        # Assert
        self.assertFalse(result.success)
        self.assertIn("Failed to decode JSON", result.message)

    def test_round_trips_bytes(self):
        """Round trips bytes."""
        # Arrange
        path = os.path.join(self.root, "blob.bin")

        # Act
        self.service.write_bytes(path, b"\x00\x01\xff")
        result = self.service.read_bytes(path)

        # Assert
        self.assertEqual(result.data, b"\x00\x01\xff")

    def test_make_dir_accepts_existing_directory(self):
        """Make dir accepts existing directory."""
        # Act
        result = self.service.make_dir(self.root)

        # Assert
        self.assertTrue(result.success)

    def test_make_dir_refuses_existing_file(self):
        """Make dir refuses existing file."""
        # Arrange
        path = os.path.join(self.root, "file.txt")
        self.service.write_text(path, "")

        # Act
        result = self.service.make_dir(path)

        # Assert
        self.assertFalse(result.success)
        self.assertEqual(result.code, ResultCode.STORAGE)

    def test_hashes_file_content(self):
        """Hashes file content."""
        # Arrange
        path = os.path.join(self.root, "blob.bin")
        self.service.write_bytes(path, b"content")

        # Act
        result = self.service.file_hash(path)

        # Assert
        self.assertEqual(result.data, hashlib.sha256(b"content").hexdigest())

    def test_reports_path_existence(self):
        """Reports path existence."""
        # Assert
        self.assertTrue(self.service.path_exists(self.root))
        self.assertFalse(self.service.path_exists(os.path.join(self.root, "nothing")))
