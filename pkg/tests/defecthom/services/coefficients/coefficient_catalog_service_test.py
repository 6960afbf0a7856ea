"""Necessary imports for the coefficient catalog tests."""

import unittest

import numpy as np

from defecthom.models import BoxGrid, CoefficientSet, ResultCode
from defecthom.services.coefficients import CoefficientCatalogService
from defecthom.services.coefficients.families.profiles import identity, zero_vector
from defecthom.services.fields import FieldCalculusService
from defecthom.services.notifications.notifications_service_mock import MockNotificationsService


class TestCoefficientCatalogService(unittest.TestCase):
    """Coefficient catalog tests."""

    mock_notifications: MockNotificationsService
    service: CoefficientCatalogService
    probe_grid: BoxGrid

    def setUp(self):
        self.mock_notifications = MockNotificationsService()
        self.service = CoefficientCatalogService(self.mock_notifications, FieldCalculusService())
        self.probe_grid = BoxGrid(2, 4, 128)

    def test_lists_every_family(self):
        """Lists every family."""
        # Act
        result = self.service.families()

        # Assert
        self.assertEqual(
            sorted(result),
            [
                "algebraic-decay-defect",
                "constant-drift-1d",
                "custom",
                "gaussian-bump-defect",
                "gradient-defect",
                "identity",
                "shear-2d",
                "sin-drift-1d",
            ],
        )

    def test_unknown_family_is_a_usage_error(self):
        """Unknown family is a usage error."""
        # Act
        result = self.service.build_family("honeycomb", {})

        # Assert
        self.assertFalse(result.success)
        self.assertEqual(result.code, ResultCode.USAGE)
        self.assertIn("identity", result.message)

    def test_unknown_parameter_is_a_usage_error(self):
        """Unknown parameter is a usage error."""
        # Act
        result = self.service.build_family("identity", {"d": 2, "amp": 1.0})

        # Assert
        self.assertFalse(result.success)
        self.assertEqual(result.code, ResultCode.USAGE)
        self.assertIn("amp", result.message)

    def test_out_of_range_parameter_is_a_usage_error(self):
        """Out of range parameter is a usage error."""
        # Act
        result = self.service.build_family("gaussian-bump-defect", {"a_amp": -1.5})

        # Assert
        self.assertEqual(result.code, ResultCode.USAGE)
        self.assertIn("ellipticity", result.message)

    def test_constant_drift_is_a_counterexample(self):
        """Constant drift is a counterexample."""
        # Assert
        self.assertTrue(self.service.is_counterexample("constant-drift-1d", {}))
        self.assertFalse(self.service.is_counterexample("identity", {"d": 1}))

    def test_identity_passes_validation(self):
        """Identity passes validation."""
        # Arrange
        coefficients = self.service.build_family("identity", {"d": 2}).data

        # Act
        result = self.service.validate(coefficients, self.probe_grid)

        # Assert
        report = result.data
        self.assertTrue(report.passed)
        self.assertAlmostEqual(report.lambda_est, 1.0)
        self.assertAlmostEqual(report.Lambda_est, 1.0)
        self.assertIn("no defect part: decay checks skipped", report.notes)

    def test_integrable_defect_decays(self):
        """Integrable defect decays."""
        # Arrange
        coefficients = self.service.build_family(
            "algebraic-decay-defect", {"d": 2, "gamma": 3.0}
        ).data

        # Act
        result = self.service.validate(coefficients, self.probe_grid)

        # Assert
        report = result.data
        self.assertTrue(report.passed, report.flags)
        self.assertLess(report.decay_fit_b, 0.0)

    def test_slowly_decaying_defect_is_flagged(self):
        """Slowly decaying defect is flagged."""
        # Arrange
        coefficients = self.service.build_family(
            "algebraic-decay-defect", {"d": 2, "gamma": 0.5, "counterexample": True}
        ).data

        # Act
        result = self.service.validate(coefficients, self.probe_grid)

        # Assert
        report = result.data
        self.assertFalse(report.passed)
        self.assertTrue(any("does not look L^s" in flag for flag in report.flags))
        self.assertIn("family is marked as a counterexample: flags are expected", report.notes)

    def test_negative_diffusion_is_not_elliptic(self):
        """Negative diffusion is not elliptic."""
        # Arrange
        coefficients = CoefficientSet(
            name="negative", d=2, a_per=lambda x: -identity(x), b_per=zero_vector
        )

        # Act
        result = self.service.validate(coefficients, self.probe_grid)

        # Assert
        report = result.data
        self.assertLess(report.lambda_est, 0.0)
        self.assertTrue(any("not uniformly elliptic" in flag for flag in report.flags))
        self.assertEqual(self.mock_notifications.params[-1]["type"], "warning")

    def test_non_symmetric_diffusion_is_flagged(self):
        """Non symmetric diffusion is flagged."""

        # Arrange
        def skewed(x: np.ndarray) -> np.ndarray:
            result = identity(x)
            result[0, 1] = 0.5
            return result

        coefficients = CoefficientSet(name="skewed", d=2, a_per=skewed, b_per=zero_vector)

        # Act
        result = self.service.validate(coefficients, self.probe_grid)

        # Assert
        self.assertIn("a_per is not symmetric", result.data.flags)

    def test_rejects_coarse_probe_grid(self):
        """Rejects coarse probe grid."""
        # Arrange
        coefficients = self.service.build_family("identity", {"d": 2}).data

        # Act
        result = self.service.validate(coefficients, BoxGrid(2, 4, 32))

        # Assert
        self.assertFalse(result.success)
        self.assertEqual(result.code, ResultCode.USAGE)

    def test_rejects_probe_grid_of_another_dimension(self):
        """Rejects probe grid of another dimension."""
        # Arrange
        coefficients = self.service.build_family("identity", {"d": 1}).data

        # Act
        result = self.service.validate(coefficients, self.probe_grid)

        # Assert
        self.assertEqual(result.code, ResultCode.USAGE)
