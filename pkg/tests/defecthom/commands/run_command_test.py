"""Necessary imports to test the run command."""

import unittest

from defecthom.commands import RunCommand
from defecthom.models import ArtifactManifest, CoefficientSet, OperationResult, ResultCode
from defecthom.models.configuration import ConfigOverrides, ExperimentConfig
from defecthom.services.coefficients.families import IdentityFamily
from defecthom.services.configuration.experiment_config_reader import (
    experiment_config_reader_service_mock as reader_mock,
)
from defecthom.services.experiments.experiment_runner.experiment_runner_service_mock import (
    MockExperimentRunnerService,
)
from defecthom.services.notifications.notifications_service_mock import MockNotificationsService


class TestRunCommand(unittest.TestCase):
    """Run command tests."""

    mock_reader: reader_mock.MockExperimentConfigReaderService
    mock_runner: MockExperimentRunnerService
    mock_notifications: MockNotificationsService
    factory_params: list[ExperimentConfig]
    command: RunCommand

    def setUp(self):
        self.mock_reader = reader_mock.MockExperimentConfigReaderService()
        self.mock_runner = MockExperimentRunnerService()
        self.mock_notifications = MockNotificationsService()
        self.factory_params = []
        self.coefficients = IdentityFamily().build({"d": 1})
        self.mock_reader.validate_result = OperationResult[CoefficientSet].succeed(
            self.coefficients
        )

        def factory(config: ExperimentConfig) -> MockExperimentRunnerService:
            self.factory_params.append(config)
            return self.mock_runner

        self.command = RunCommand(self.mock_reader, factory, self.mock_notifications)

    def test_runs_a_valid_configuration(self):
        """Runs a valid configuration."""
        # Arrange
        overrides = ConfigOverrides(output_dir="out/x")

        # Act
        code = self.command.execute("configs/cell.json", overrides)

        # Assert
        self.assertEqual(code, 0)
        self.assertEqual(self.mock_reader.read_params, [("configs/cell.json", overrides)])
        config = self.mock_reader.read_result.data
        self.assertEqual(self.factory_params, [config])
        self.assertEqual(self.mock_runner.run_params, [(config, self.coefficients)])

    def test_unreadable_configuration_exits_with_usage(self):
        """Unreadable configuration exits with usage."""
        # Arrange
        self.mock_reader.read_result = OperationResult[ExperimentConfig].fail(
            "Cannot read configuration", ResultCode.USAGE
        )

        # Act
        code = self.command.execute("missing.json")

        # Assert
        self.assertEqual(code, 2)
        self.assertEqual(self.mock_reader.validate_params, [])
        self.assertTrue(self.mock_notifications.find_notifications("Cannot read", "error"))

    def test_invalid_configuration_exits_with_usage(self):
        """Invalid configuration exits with usage."""
        # Arrange
        self.mock_reader.validate_result = OperationResult[CoefficientSet].fail(
            "Unknown experiment kind", ResultCode.USAGE
        )

        # Act
        code = self.command.execute("configs/cell.json")

        # Assert
        self.assertEqual(code, 2)
        self.assertEqual(self.factory_params, [])

    def test_violated_contract_exits_with_one(self):
        """Violated contract exits with one."""
        # Arrange
        manifest = ArtifactManifest(
            kind="cell",
            family="identity",
            config_hash="0" * 64,
            versions={},
            contracts={"zero_drift": False},
        )
        self.mock_runner.run_result = OperationResult[ArtifactManifest].succeed(manifest)

        # Act
        code = self.command.execute("configs/cell.json")

        # Assert
        self.assertEqual(code, 1)

    def test_solver_fault_exits_with_one(self):
        """Solver fault exits with one."""
        # Arrange
        self.mock_runner.run_result = OperationResult[ArtifactManifest].fail(
            "GMRES stalled", ResultCode.SOLVER_FAULT
        )

        # Act
        code = self.command.execute("configs/cell.json")

        # Assert
        self.assertEqual(code, 1)
        self.assertTrue(self.mock_notifications.find_notifications("GMRES stalled", "error"))
