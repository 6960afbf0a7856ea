"""Necessary imports for the quadrature tests."""

import math
import unittest

import numpy as np

from defecthom.services.oracle1d import (
    cell_average,
    cumulative_integral,
    half_line_integral,
    integrate,
)


class TestQuadrature(unittest.TestCase):
    """Quadrature tests."""

    def test_integrate_trigonometric_square(self):
        """Integrate trigonometric square."""
        # Act
        value = integrate(lambda x: np.sin(2.0 * math.pi * x) ** 2, 0.0, 1.0)

        # Assert
        self.assertAlmostEqual(value, 0.5, places=14)

    def test_integrate_empty_interval(self):
        """Integrate empty interval."""
        # Act
        value = integrate(np.exp, 2.0, 2.0)

        # Assert
        self.assertEqual(value, 0.0)

    def test_cell_average_of_a_mode_vanishes(self):
        """Cell average of a mode vanishes."""
        # Act
        value = cell_average(lambda x: np.cos(6.0 * math.pi * x))

        # Assert
        self.assertAlmostEqual(value, 0.0, places=14)

    def test_cumulative_integral_is_the_antiderivative(self):
        """Cumulative integral is the antiderivative."""
        # Arrange
        points = np.array([[-1.3, -0.2, 0.0], [0.45, 0.9, 3.7]])

        # Act
        values = cumulative_integral(lambda x: np.cos(2.0 * math.pi * x), points)

        # Assert
        np.testing.assert_allclose(values, np.sin(2.0 * math.pi * points) / (2.0 * math.pi),
                                   atol=1e-13)
        self.assertEqual(values.shape, points.shape)

    def test_cumulative_integral_from_an_anchor(self):
        """Cumulative integral from an anchor."""
        # Arrange
        points = np.array([-2.0, 0.5, 1.0])

        # Act
        values = cumulative_integral(lambda x: 2.0 * x, points, anchor=1.0)

        # Assert
        np.testing.assert_allclose(values, points**2 - 1.0, atol=1e-13)

    def test_half_line_integral_converges(self):
        """Half line integral converges."""
        # Act
        right, right_converged = half_line_integral(lambda x: np.exp(-x), 1.0)
        left, left_converged = half_line_integral(lambda x: np.exp(-(x**2)), -1.0)

        # Assert
        self.assertTrue(right_converged)
        self.assertAlmostEqual(right, 1.0, places=12)
        self.assertTrue(left_converged)
        self.assertAlmostEqual(left, math.sqrt(math.pi) / 2.0, places=12)

    def test_half_line_integral_detects_divergence(self):
        """Half line integral detects divergence."""
        # Act
        _, converged = half_line_integral(lambda x: 1.0 / np.sqrt(1.0 + x**2), 1.0)

        # Assert
        self.assertFalse(converged)
