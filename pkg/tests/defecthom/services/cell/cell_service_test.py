"""Necessary imports for the cell service tests."""

import math
import unittest

import numpy as np

from defecthom.models import Field, OperationResult, ResultCode, TorusGrid
from defecthom.models.configuration import SolverSettings
from defecthom.services.cell import CellService
from defecthom.services.coefficients.families import (
    ConstantDriftFamily,
    GaussianBumpFamily,
    IdentityFamily,
    ShearFamily,
    SinDriftFamily,
)
from defecthom.services.fields import FieldCalculusService
from defecthom.services.fields.field_calculus_service_mock import MockFieldCalculusService
from defecthom.services.linear_solver import LinearSolverService
from defecthom.services.notifications.notifications_service_mock import MockNotificationsService


class TestCellService(unittest.TestCase):
    """Cell service tests."""

    mock_notifications: MockNotificationsService
    service: CellService

    def setUp(self):
        self.mock_notifications = MockNotificationsService()
        settings = SolverSettings.default()
        settings.workers = 2
        self.service = CellService(
            self.mock_notifications,
            LinearSolverService(self.mock_notifications, settings),
            FieldCalculusService(),
            settings,
        )

    def test_identity_cell_problem(self):
        """Identity has m = 1, vanishing correctors and A* = Id."""
        # Arrange
        coefficients = IdentityFamily().build({"d": 2})

        # Act
        result = self.service.solve_all(coefficients, TorusGrid(2, 16))

        # Assert
        self.assertTrue(result.success, result.message)
        solution = result.data
        np.testing.assert_allclose(solution.m_per.values, 1.0, atol=1e-10)
        for corrector in solution.w_per:
            np.testing.assert_allclose(corrector.values, 0.0, atol=1e-10)
        np.testing.assert_allclose(solution.B_per.values, 0.0, atol=1e-10)
        np.testing.assert_allclose(solution.A_star, np.eye(2), atol=1e-10)
        np.testing.assert_allclose(solution.drift, 0.0, atol=1e-12)
        self.assertEqual(len(self.mock_notifications.find_notifications("A* =", "success")), 1)

    def test_shear_flow_enhances_diffusion(self):
        """Shear flow enhances diffusion along the flow."""
        # Arrange
        amp = 2.0
        coefficients = ShearFamily().build({"amp": amp})

        # Act
        result = self.service.solve_all(coefficients, TorusGrid(2, 32))

        # Assert
        self.assertTrue(result.success, result.message)
        expected = np.diag([1.0 + amp**2 / (8.0 * math.pi**2), 1.0])
        np.testing.assert_allclose(result.data.A_star, expected, atol=1e-8)
        np.testing.assert_allclose(result.data.m_per.values, 1.0, atol=1e-10)
        self.assertLess(result.data.A_star_discrepancy, 1e-8)

    def test_gradient_drift_measure_is_a_gibbs_density(self):
        """Gradient drift measure is a Gibbs density."""
        # Arrange
        coefficients = GaussianBumpFamily().build({"d": 2, "potential": 0.25, "swirl": 0.25})
        grid = TorusGrid(2, 32)
        x = grid.coordinates()[0]
        gibbs = np.exp(-0.25 * np.cos(2.0 * math.pi * x))
        gibbs /= np.mean(gibbs)

        # Act
        result = self.service.solve_invariant_measure(coefficients, grid)

        # Assert
        self.assertTrue(result.success, result.message)
        np.testing.assert_allclose(result.data.values, gibbs, atol=1e-9)

    def test_one_dimensional_measure_closed_form(self):
        """One dimensional measure closed form."""
        # Arrange
        amp = 1.0
        coefficients = SinDriftFamily().build({"amp": amp})
        grid = TorusGrid(1, 64)
        x = grid.coordinates()[0]
        expected = np.exp(-amp * (1.0 - np.cos(2.0 * math.pi * x)) / (2.0 * math.pi))
        expected /= np.mean(expected)

        # Act
        result = self.service.solve_all(coefficients, grid)

        # Assert
        self.assertTrue(result.success, result.message)
        np.testing.assert_allclose(result.data.m_per.values, expected, atol=1e-9)
        self.assertLess(result.data.residuals["w_per_0"], 1e-8)
        self.assertGreater(result.data.ellipticity_margin, 0.0)

    def test_constant_drift_is_rejected(self):
        """Constant drift is rejected with the drift reported."""
        # Arrange
        coefficients = ConstantDriftFamily().build({"drift": 1.0})

        # Act
        result = self.service.solve_all(coefficients, TorusGrid(1, 32))

        # Assert
        self.assertFalse(result.success)
        self.assertEqual(result.code, ResultCode.PRECONDITION)
        self.assertIn("zero-drift condition violated", result.message)
        self.assertIn("[1.]", result.message)

    def test_drift_of_the_constant_drift_is_one(self):
        """Drift of the constant drift is one."""
        # Arrange
        coefficients = ConstantDriftFamily().build({"drift": 1.0})
        grid = TorusGrid(1, 32)
        m_per = self.service.solve_invariant_measure(coefficients, grid).data

        # Act
        result = self.service.drift(m_per, coefficients)

        # Assert
        np.testing.assert_allclose(m_per.values, 1.0, atol=1e-10)
        np.testing.assert_allclose(result.data, [1.0], atol=1e-10)

    def test_drift_is_the_cell_average_of_the_fields_service(self):
        """Drift is the cell average of the fields service."""
        # Arrange
        mock_field_calculus = MockFieldCalculusService()
        mock_field_calculus.mean_result = OperationResult[float | np.ndarray].succeed(
            np.array([0.25])
        )
        settings = SolverSettings.default()
        service = CellService(
            self.mock_notifications,
            LinearSolverService(self.mock_notifications, settings),
            mock_field_calculus,
            settings,
        )
        coefficients = SinDriftFamily().build({"amp": 1.0})
        grid = TorusGrid(1, 16)
        m_per = Field.scalar(grid, np.full(grid.shape, 2.0), "m_per")

        # Act
        result = service.drift(m_per, coefficients)

        # Assert
        np.testing.assert_array_equal(result.data, [0.25])
        self.assertEqual(len(mock_field_calculus.mean_params), 1)
        flux = mock_field_calculus.mean_params[0]
        self.assertEqual(flux.rank, 1)
        expected = 2.0 * coefficients.sample_b_per(grid).values
        np.testing.assert_allclose(flux.values, expected)

    def test_drift_failure_of_the_fields_service_is_passed_on(self):
        """Drift failure of the fields service is passed on."""
        # Arrange
        mock_field_calculus = MockFieldCalculusService()
        mock_field_calculus.mean_result = OperationResult[float | np.ndarray].fail(
            "no average", ResultCode.USAGE
        )
        settings = SolverSettings.default()
        service = CellService(
            self.mock_notifications,
            LinearSolverService(self.mock_notifications, settings),
            mock_field_calculus,
            settings,
        )
        grid = TorusGrid(1, 16)
        m_per = Field.scalar(grid, np.ones(grid.shape))

        # Act
        result = service.drift(m_per, IdentityFamily().build({"d": 1}))

        # Assert
        self.assertFalse(result.success)
        self.assertEqual(result.code, ResultCode.USAGE)

    def test_sin_drift_measure_at_fine_resolution(self):
        """Sin drift measure and corrector match the closed forms at n = 256."""
        # Arrange
        amp = 1.0
        coefficients = SinDriftFamily().build({"amp": amp})
        grid = TorusGrid(1, 256)
        x = grid.coordinates()[0]
        potential = amp * (1.0 - np.cos(2.0 * math.pi * x)) / (2.0 * math.pi)
        expected = np.exp(-potential)
        expected /= np.mean(expected)
        expected_slope = np.exp(potential) / np.mean(np.exp(potential)) - 1.0

        # Act
        result = self.service.solve_all(coefficients, grid)

        # Assert
        self.assertTrue(result.success, result.message)
        m_per = result.data.m_per.values
        self.assertLess(float(np.max(np.abs(m_per - expected) / expected)), 1e-8)
        slope = FieldCalculusService().differentiate(result.data.w_per[0], "grad").data
        np.testing.assert_allclose(slope.values[0], expected_slope, atol=1e-8)

    def test_corrector_rejects_direction_of_wrong_size(self):
        """Corrector rejects direction of wrong size."""
        # Arrange
        coefficients = IdentityFamily().build({"d": 2})

        # Act
        result = self.service.solve_corrector_periodic(
            coefficients, TorusGrid(2, 16), np.array([1.0, 0.0, 0.0])
        )

        # Assert
        self.assertEqual(result.code, ResultCode.USAGE)

    def test_measure_rejects_grid_of_another_dimension(self):
        """Measure rejects grid of another dimension."""
        # Arrange
        coefficients = IdentityFamily().build({"d": 3})

        # Act
        result = self.service.solve_invariant_measure(coefficients, TorusGrid(2, 16))

        # Assert
        self.assertEqual(result.code, ResultCode.USAGE)

    def test_shear_corrector_closed_form(self):
        """Shear corrector closed form."""
        # Arrange
        amp = 1.5
        coefficients = ShearFamily().build({"amp": amp})
        grid = TorusGrid(2, 32)
        y = grid.coordinates()[1]

        # Act
        result = self.service.solve_corrector_periodic(coefficients, grid, np.array([1.0, 0.0]))

        # Assert
        self.assertTrue(result.success, result.message)
        expected = -amp * np.sin(2.0 * math.pi * y) / (4.0 * math.pi**2)
        np.testing.assert_allclose(result.data.values, expected, atol=1e-10)
