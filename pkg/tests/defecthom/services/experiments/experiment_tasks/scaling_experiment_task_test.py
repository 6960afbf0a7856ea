"""Necessary imports to test the Hessian scaling experiment task."""

import unittest

from defecthom.models import CellSolution, OperationResult, RateFit, ResultCode, TorusGrid
from defecthom.models.configuration import DomainSettings, ExperimentConfig, SolverSettings
from defecthom.services.cache.cell_cache_service_mock import MockCellCacheService
from defecthom.services.cell import CellService
from defecthom.services.cell.cell_service_mock import MockCellService
from defecthom.services.coefficients.families import IdentityFamily, SinDriftFamily
from defecthom.services.experiments import ArtifactWriter, CellProvider, ScalingExperimentTask
from defecthom.services.field_storage.field_storage_service_mock import MockFieldStorageService
from defecthom.services.fields import FieldCalculusService
from defecthom.services.file_system.file_system_service_mock import MockFileSystemService
from defecthom.services.linear_solver import LinearSolverService
from defecthom.services.multiscale.multiscale_service_mock import MockMultiscaleService
from defecthom.services.notifications.notifications_service_mock import MockNotificationsService


def fit(slope: float) -> RateFit:
    """Rate fit with the given slope."""
    return RateFit(slope=slope, intercept=0.0, residual=0.01, band=0.0, points=3)


class TestScalingExperimentTask(unittest.TestCase):
    """Hessian scaling experiment task tests."""

    mock_cell: MockCellService
    mock_multiscale: MockMultiscaleService
    mock_file_system: MockFileSystemService
    writer: ArtifactWriter
    task: ScalingExperimentTask
    config: ExperimentConfig
    cell_service: CellService

    def setUp(self):
        notifications = MockNotificationsService()
        self.mock_cell = MockCellService()
        self.mock_multiscale = MockMultiscaleService()
        self.mock_file_system = MockFileSystemService()
        self.writer = ArtifactWriter(self.mock_file_system, MockFieldStorageService(), "out")
        self.task = ScalingExperimentTask(
            CellProvider(self.mock_cell, MockCellCacheService(), notifications),
            FieldCalculusService(),
            self.mock_multiscale,
        )
        self.config = ExperimentConfig.default()
        self.config.kind = "scaling"
        self.config.grid.n_cell = 16
        self.config.grid.domain = DomainSettings(lower=0.0, upper=1.0, n=64)
        self.config.experiment = {"eps_list": [0.25, 0.125, 0.0625], "beta": 3.0}
        settings = SolverSettings.default()
        self.cell_service = CellService(
            notifications,
            LinearSolverService(notifications, settings),
            FieldCalculusService(),
            settings,
        )

    def preset_cell(self, coefficients):
        """Real cell solution served by the mocked cell service."""
        cell = self.cell_service.solve_all(coefficients, TorusGrid(1, 16)).data
        self.mock_cell.solve_all_result = OperationResult[CellSolution].succeed(cell)

    def test_flat_correctors_expect_no_growth(self):
        """Flat correctors expect no growth."""
        # Arrange
        coefficients = IdentityFamily().build({"d": 1})
        self.preset_cell(coefficients)
        self.mock_multiscale.hessian_scaling_result = OperationResult[RateFit].succeed(fit(0.05))

        # Act
        result = self.task.run(self.config, coefficients, self.writer)

        # Assert
        self.assertTrue(result.success, result.message)
        self.assertEqual(result.data.summary["expected_slope"], 0.0)
        self.assertTrue(result.data.contracts["hessian_slope_matches"])
        self.assertEqual(self.mock_multiscale.hessian_scaling_params[0]["beta"], 3.0)
        self.assertEqual(result.data.files, ["scaling_summary.json"])
        self.assertEqual(self.mock_file_system.write_json_params[0].data["fit"]["slope"], 0.05)

    def test_curved_correctors_expect_inverse_growth(self):
        """Curved correctors expect inverse growth."""
        # Arrange
        coefficients = SinDriftFamily().build({"amp": 1.0})
        self.preset_cell(coefficients)
        self.mock_multiscale.hessian_scaling_result = OperationResult[RateFit].succeed(fit(0.0))

        # Act
        result = self.task.run(self.config, coefficients, self.writer)

        # Assert
        self.assertEqual(result.data.summary["expected_slope"], -1.0)
        self.assertGreater(result.data.summary["corrector_hessian_max"], 1e-3)
        self.assertFalse(result.data.contracts["hessian_slope_matches"])
        self.assertEqual(result.data.residuals["hessian_slope"], 0.0)

    def test_scaling_failure_is_returned(self):
        """Scaling failure is returned."""
        # Arrange
        coefficients = IdentityFamily().build({"d": 1})
        self.preset_cell(coefficients)
        self.mock_multiscale.hessian_scaling_result = OperationResult[RateFit].fail(
            "non-positive value", ResultCode.USAGE
        )

        # Act
        result = self.task.run(self.config, coefficients, self.writer)

        # Assert
        self.assertEqual(result.code, ResultCode.USAGE)
        self.assertEqual(self.writer.files, [])
