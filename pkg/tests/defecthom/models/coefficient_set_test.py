"""Necessary imports to test coefficient set logic."""

import unittest

import numpy as np

from defecthom.models import BoxGrid, CoefficientSet, TorusGrid


def identity(x: np.ndarray) -> np.ndarray:
    d = x.shape[0]
    return np.broadcast_to(np.eye(d).reshape((d, d) + (1,) * (x.ndim - 1)), (d, d) + x.shape[1:])


def shear_drift(x: np.ndarray) -> np.ndarray:
    result = np.zeros(x.shape)
    result[0] = np.sin(2.0 * np.pi * x[1])
    return result


def bump(x: np.ndarray) -> np.ndarray:
    result = np.zeros(x.shape)
    result[0] = np.exp(-np.sum(x**2, axis=0))
    return result


class TestCoefficientSet(unittest.TestCase):
    """Coefficient set tests."""

    coefficients: CoefficientSet

    def setUp(self):
        self.coefficients = CoefficientSet(
            name="shear-with-bump",
            d=2,
            a_per=identity,
            b_per=shear_drift,
            b_tilde=bump,
            params={"amp": 1.0},
        )

    def test_reports_defect_parts(self):
        """Reports defect parts."""
        # Assert
        self.assertFalse(self.coefficients.has_a_defect)
        self.assertTrue(self.coefficients.has_b_defect)
        self.assertTrue(self.coefficients.has_defect)

    def test_missing_defect_samples_as_zero(self):
        """Missing defect samples as zero."""
        # Act
        a_tilde = self.coefficients.sample_a_tilde(BoxGrid(2, 2, 16))

        # Assert
        self.assertTrue(a_tilde.symmetric)
        self.assertEqual(a_tilde.max_abs(), 0.0)

    def test_full_drift_adds_the_defect(self):
        """Full drift adds the defect."""
        # Arrange
        grid = BoxGrid(2, 2, 16)

        # Act
        b = self.coefficients.sample_b(grid)

        # Assert
        expected = self.coefficients.sample_b_per(grid).values + bump(grid.coordinates())
        np.testing.assert_allclose(b.values, expected)

    def test_rejects_grid_of_another_dimension(self):
        """Rejects grid of another dimension."""
        # Act & Assert
        with self.assertRaises(ValueError):
            self.coefficients.sample_b(TorusGrid(1, 16))

    def test_rescales_the_coordinates(self):
        """Rescales the coordinates."""
        # Arrange
        grid = BoxGrid(2, 1, 16)

        # Act
        _, b = self.coefficients.sample_rescaled(grid, 0.5)

        # Assert
        points = grid.coordinates() / 0.5
        np.testing.assert_allclose(b, shear_drift(points) + bump(points))

    def test_scales_only_the_defect(self):
        """Scales only the defect."""
        # Arrange
        grid = BoxGrid(2, 2, 16)

        # Act
        scaled = self.coefficients.scaled_defect(3.0)

        # Assert
        np.testing.assert_allclose(
            scaled.sample_b_tilde(grid).values, 3.0 * bump(grid.coordinates())
        )
        np.testing.assert_allclose(
            scaled.sample_b_per(grid).values, self.coefficients.sample_b_per(grid).values
        )

    def test_potential_defaults_to_zero(self):
        """Potential defaults to zero."""
        # Act
        psi = self.coefficients.sample_potential(BoxGrid(2, 2, 16))

        # Assert
        self.assertEqual(psi.max_abs(), 0.0)

    def test_identity_object_names_family_dimension_and_params(self):
        """Identity object names family, dimension and params."""
        # Act
        result = self.coefficients.as_object()

        # Assert
        self.assertEqual(result, {"family": "shear-with-bump", "d": 2, "params": {"amp": 1.0}})
