"""Necessary imports to test operation result logic."""

import unittest

from defecthom.models import OperationResult, ResultCode


class TestOperationResult(unittest.TestCase):
    """Operation result tests."""

    def test_success_carries_data(self):
        """Success carries data."""
        # Act
        result = OperationResult[int].succeed(5)

        # Assert
        self.assertTrue(result.success)
        self.assertEqual(result.data, 5)
        self.assertEqual(result.code, ResultCode.OK)

    def test_failure_defaults_to_solver_fault(self):
        """Failure defaults to solver fault."""
        # Act
        result = OperationResult[int].fail("diverged")

        # Assert
        self.assertFalse(result.success)
        self.assertEqual(result.message, "diverged")
        self.assertEqual(result.code, ResultCode.SOLVER_FAULT)

    def test_as_fail_keeps_message_and_code(self):
        """As fail keeps message and code."""
        # Arrange
        failure = OperationResult[int].fail("bad input", ResultCode.USAGE)

        # Act
        result = failure.as_fail()

        # Assert
        self.assertEqual(result, OperationResult[str].fail("bad input", ResultCode.USAGE))

    def test_with_context_prefixes_the_message(self):
        """With context prefixes the message."""
        # Arrange
        failure = OperationResult[int].fail("missing", ResultCode.STORAGE)

        # Act
        result = failure.with_context("reading cache")

        # Assert
        self.assertEqual(result.message, "reading cache: missing")
        self.assertEqual(result.code, ResultCode.STORAGE)
        self.assertFalse(result.success)

    def test_cannot_be_constructed_directly(self):
        """Cannot be constructed directly."""
        # Act & Assert
        with self.assertRaises(TypeError):
            OperationResult[int](object(), True, "", 0, 1)

    def test_maps_codes_to_exit_statuses(self):
        """Maps codes to exit statuses."""
        # Assert
        self.assertEqual(ResultCode.OK.exit_code(), 0)
        self.assertEqual(ResultCode.USAGE.exit_code(), 2)
        self.assertEqual(ResultCode.CONTRACT_VIOLATION.exit_code(), 1)
        self.assertEqual(ResultCode.PRECONDITION.exit_code(), 1)
        self.assertEqual(ResultCode.STORAGE.exit_code(), 1)
