"""Necessary imports for the coefficient family tests."""

import math
import unittest

import numpy as np

from defecthom.services.coefficients.families import (
    AlgebraicDecayFamily,
    ConstantDriftFamily,
    CustomFamily,
    GaussianBumpFamily,
    GradientDefectFamily,
    IdentityFamily,
    ShearFamily,
    SinDriftFamily,
)


def line(start: float, stop: float, count: int) -> np.ndarray:
    """Points of shape (1, count)."""
    return np.linspace(start, stop, count).reshape(1, -1)


class TestIdentityFamily(unittest.TestCase):
    """Identity family tests."""

    family: IdentityFamily

    def setUp(self):
        self.family = IdentityFamily()

    def test_builds_laplacian(self):
        """Builds the Laplacian."""
        # Arrange
        points = np.zeros((3, 4))

        # Act
        coefficients = self.family.build({"d": 3})

        # Assert
        self.assertEqual(coefficients.d, 3)
        self.assertFalse(coefficients.has_defect)
        np.testing.assert_array_equal(coefficients.a_per(points)[:, :, 0], np.eye(3))
        np.testing.assert_array_equal(coefficients.b_per(points), np.zeros((3, 4)))

    def test_rejects_dimension_four(self):
        """Rejects dimension four."""
        # Act
        with self.assertRaises(ValueError):
            self.family.build({"d": 4})


class TestSinDriftFamily(unittest.TestCase):
    """Sin drift family tests."""

    family: SinDriftFamily

    def setUp(self):
        self.family = SinDriftFamily()

    def test_background_is_periodic(self):
        """Background is periodic."""
        # Arrange
        coefficients = self.family.build({"amp": 0.7})
        points = line(-0.5, 0.5, 11)

        # Act
        shifted = coefficients.b_per(points + 3.0)

        # Assert
        np.testing.assert_allclose(shifted, coefficients.b_per(points), atol=1e-12)
        np.testing.assert_allclose(
            coefficients.b_per(points), 0.7 * np.sin(2.0 * math.pi * points), atol=1e-12
        )

    def test_odd_gaussian_defect_is_the_derivative_of_its_potential(self):
        """Odd gaussian defect is the derivative of its potential."""
        # Arrange
        coefficients = self.family.build({"defect_amp": 0.4, "defect_width": 0.5})
        points = line(-2.0, 2.0, 41)
        step = 1e-6

        # Act
        derivative = (
            coefficients.potential(points + step) - coefficients.potential(points - step)
        ) / (2.0 * step)

        # Assert
        np.testing.assert_allclose(coefficients.b_tilde(points)[0], derivative, atol=1e-7)
        self.assertFalse(coefficients.counterexample)

    def test_sqrt_tail_is_a_counterexample(self):
        """Sqrt tail is a counterexample."""
        # Act
        coefficients = self.family.build({"defect_amp": 0.3, "defect_kind": "sqrt-tail"})

        # Assert
        self.assertTrue(coefficients.counterexample)
        self.assertIsNone(coefficients.potential)
        self.assertAlmostEqual(float(coefficients.b_tilde(np.zeros((1, 1)))[0, 0]), 0.3)

    def test_no_defect_amplitude_means_no_defect(self):
        """No defect amplitude means no defect."""
        # Act
        coefficients = self.family.build({})

        # Assert
        self.assertFalse(coefficients.has_defect)
        self.assertTrue(coefficients.outside_hypothesis)

    def test_rejects_unknown_defect_kind(self):
        """Rejects unknown defect kind."""
        # Act
        with self.assertRaises(ValueError):
            self.family.build({"defect_amp": 0.3, "defect_kind": "box"})


class TestConstantDriftFamily(unittest.TestCase):
    """Constant drift family tests."""

    def test_drift_is_constant(self):
        """Drift is constant."""
        # Arrange
        family = ConstantDriftFamily()

        # Act
        coefficients = family.build({"drift": 2.5})

        # Assert
        np.testing.assert_array_equal(coefficients.b_per(line(0.0, 1.0, 5)), np.full((1, 5), 2.5))
        self.assertTrue(coefficients.counterexample)


class TestShearFamily(unittest.TestCase):
    """Shear family tests."""

    def test_drift_follows_the_shear_profile(self):
        """Drift follows the shear profile."""
        # Arrange
        coefficients = ShearFamily().build({"amp": 2.0})
        points = np.array([[0.1, 0.3, 0.9], [0.25, 0.0, 0.75]])

        # Act
        drift = coefficients.b_per(points)

        # Assert
        np.testing.assert_allclose(drift[0], [2.0, 0.0, -2.0], atol=1e-12)
        np.testing.assert_array_equal(drift[1], np.zeros(3))


class TestGaussianBumpFamily(unittest.TestCase):
    """Gaussian bump family tests."""

    family: GaussianBumpFamily

    def setUp(self):
        self.family = GaussianBumpFamily()

    def test_defaults_sit_inside_the_hypothesis(self):
        """Defaults sit inside the hypothesis."""
        # Act
        coefficients = self.family.build({})

        # Assert
        self.assertEqual(coefficients.d, 3)
        self.assertFalse(coefficients.outside_hypothesis)
        self.assertEqual(coefficients.lambda_min, 1.0)
        self.assertEqual(coefficients.lambda_max, 1.5)

    def test_defect_peaks_at_the_origin(self):
        """Defect peaks at the origin."""
        # Arrange
        coefficients = self.family.build({"d": 2, "a_amp": 0.5, "b_amp": 0.25})
        points = np.array([[0.0, 3.0], [0.0, 0.0]])

        # Act
        a_tilde = coefficients.a_tilde(points)
        b_tilde = coefficients.b_tilde(points)

        # Assert
        np.testing.assert_allclose(a_tilde[:, :, 0], 0.5 * np.eye(2))
        self.assertAlmostEqual(float(b_tilde[0, 0]), 0.25)
        self.assertLess(float(a_tilde[0, 0, 1]), 0.5 * math.exp(-4.4))
        self.assertTrue(coefficients.outside_hypothesis)

    def test_zero_amplitudes_drop_the_defect(self):
        """Zero amplitudes drop the defect."""
        # Act
        coefficients = self.family.build({"a_amp": 0.0, "b_amp": 0.0})

        # Assert
        self.assertFalse(coefficients.has_defect)

    def test_rejects_nonpositive_width(self):
        """Rejects nonpositive width."""
        # Act
        with self.assertRaises(ValueError):
            self.family.build({"width": 0.0})


class TestAlgebraicDecayFamily(unittest.TestCase):
    """Algebraic decay family tests."""

    family: AlgebraicDecayFamily

    def setUp(self):
        self.family = AlgebraicDecayFamily()

    def test_rejects_non_integrable_decay(self):
        """Rejects non integrable decay."""
        # Act
        with self.assertRaises(ValueError) as context:
            self.family.build({"d": 3, "gamma": 2.0})

        # Assert
        self.assertIn("not in L^r", str(context.exception))

    def test_accepts_non_integrable_decay_as_counterexample(self):
        """Accepts non integrable decay as counterexample."""
        # Act
        coefficients = self.family.build({"d": 3, "gamma": 2.0, "counterexample": True})

        # Assert
        self.assertTrue(coefficients.counterexample)

    def test_decays_algebraically(self):
        """Decays algebraically."""
        # Arrange
        coefficients = self.family.build({"d": 3, "gamma": 3.0, "amp": 0.5})
        points = np.array([[10.0, 20.0], [0.0, 0.0], [0.0, 0.0]])

        # Act
        values = coefficients.b_tilde(points)[0]

        # Assert
        self.assertAlmostEqual(values[0] / values[1], (401.0 / 101.0) ** 1.5, places=10)


class TestGradientDefectFamily(unittest.TestCase):
    """Gradient defect family tests."""

    family: GradientDefectFamily

    def setUp(self):
        self.family = GradientDefectFamily()

    def check_gradient(self, params: dict):
        """b_tilde matches a central difference of the potential."""
        coefficients = self.family.build(params)
        points = np.array([[0.3, -1.2, 2.0], [0.5, 0.1, -0.7]])
        step = 1e-6
        for axis in range(2):
            offset = np.zeros((2, 1))
            offset[axis] = step
            derivative = (
                coefficients.potential(points + offset) - coefficients.potential(points - offset)
            ) / (2.0 * step)
            np.testing.assert_allclose(coefficients.b_tilde(points)[axis], derivative, atol=1e-7)

    def test_gaussian_drift_is_a_gradient(self):
        """Gaussian drift is a gradient."""
        # Act / Assert
        self.check_gradient({"d": 2, "psi": {"kind": "gaussian", "height": 0.8, "width": 0.7}})

    def test_algebraic_drift_is_a_gradient(self):
        """Algebraic drift is a gradient."""
        # Act / Assert
        self.check_gradient({"d": 2, "psi": {"kind": "algebraic", "height": 0.5, "gamma": 3.0}})

    def test_partial_psi_keeps_defaults(self):
        """Partial psi keeps defaults."""
        # Act
        coefficients = self.family.build({"psi": {"height": 2.0}})

        # Assert
        self.assertEqual(coefficients.params["psi"]["kind"], "gaussian")
        self.assertEqual(coefficients.params["psi"]["height"], 2.0)

    def test_zero_height_has_no_defect(self):
        """Zero height has no defect."""
        # Act
        coefficients = self.family.build({"psi": {"height": 0.0}})

        # Assert
        self.assertFalse(coefficients.has_defect)


class TestCustomFamily(unittest.TestCase):
    """Custom family tests."""

    family: CustomFamily

    def setUp(self):
        self.family = CustomFamily()

    def test_matrix_modes_stay_symmetric(self):
        """Matrix modes stay symmetric."""
        # Arrange
        params = {"a_modes": [{"component": [0, 1], "amplitude": 0.3}]}
        points = np.array([[0.0, 0.25], [0.0, 0.0]])

        # Act
        coefficients = self.family.build(params)

        # Assert
        a = coefficients.a_per(points)
        np.testing.assert_allclose(a[0, 1], a[1, 0])
        np.testing.assert_allclose(a[0, 1], [0.3, 0.0], atol=1e-12)
        self.assertAlmostEqual(coefficients.lambda_min, 0.7, places=6)

    def test_bumps_build_the_defect(self):
        """Bumps build the defect."""
        # Arrange
        params = {
            "bumps": [
                {"target": "b", "component": [1], "amplitude": 0.5, "center": [1.0, 0.0]}
            ]
        }

        # Act
        coefficients = self.family.build(params)

        # Assert
        self.assertFalse(coefficients.has_a_defect)
        self.assertAlmostEqual(float(coefficients.b_tilde(np.array([[1.0], [0.0]]))[1, 0]), 0.5)

    def test_rejects_loss_of_ellipticity(self):
        """Rejects loss of ellipticity."""
        # Arrange
        params = {"a_modes": [{"component": [0, 0], "amplitude": -1.5}]}

        # Act
        with self.assertRaises(ValueError) as context:
            self.family.build(params)

        # Assert
        self.assertIn("not uniformly elliptic", str(context.exception))

    def test_rejects_component_out_of_range(self):
        """Rejects component out of range."""
        # Arrange
        params = {"b_modes": [{"component": [2], "amplitude": 1.0}]}

        # Act
        with self.assertRaises(ValueError):
            self.family.build(params)
