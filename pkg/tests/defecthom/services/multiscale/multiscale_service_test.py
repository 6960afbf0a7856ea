"""Necessary imports for the multiscale service tests."""

import unittest

import numpy as np
import pytest

from defecthom.models import BoxGrid, DomainGrid, EpsProblem, Field, ResultCode, TorusGrid
from defecthom.models.configuration import SolverSettings
from defecthom.services.cell import CellService
from defecthom.services.coefficients.families import IdentityFamily, SinDriftFamily
from defecthom.services.configuration import right_hand_side
from defecthom.services.defect import DefectService
from defecthom.services.fields import FieldCalculusService
from defecthom.services.linear_solver import LinearSolverService
from defecthom.services.multiscale import MultiscaleService
from defecthom.services.notifications.notifications_service_mock import MockNotificationsService

EPS_LIST = (1 / 2, 1 / 4, 1 / 8, 1 / 16)
SWEEP = (1 / 4, 1 / 8, 1 / 16, 1 / 32)


def unit_problem(n: int = 256, eps_list: tuple[float, ...] = EPS_LIST) -> EpsProblem:
    """f = 1 on [0, 1]."""
    domain = DomainGrid(1, 0.0, 1.0, n)
    return EpsProblem(domain, eps_list, Field.scalar(domain, np.ones(domain.shape), "f"))


def sine_problem(n: int = 1024) -> EpsProblem:
    """Half sine wave on [0, 1] over the sweep."""
    domain = DomainGrid(1, 0.0, 1.0, n)
    return EpsProblem(domain, SWEEP, right_hand_side(domain, "sine"))


class MultiscaleServiceTestCase(unittest.TestCase):
    """Real services wired the way the command line wires them."""

    mock_notifications: MockNotificationsService
    settings: SolverSettings
    cell_service: CellService
    service: MultiscaleService

    def setUp(self):
        self.mock_notifications = MockNotificationsService()
        self.settings = SolverSettings.default()
        self.settings.workers = 2
        linear_solver = LinearSolverService(self.mock_notifications, self.settings)
        self.cell_service = CellService(
            self.mock_notifications, linear_solver, FieldCalculusService(), self.settings
        )
        self.service = MultiscaleService(
            self.mock_notifications, linear_solver, FieldCalculusService(), self.settings
        )


class TestMultiscaleService(MultiscaleServiceTestCase):
    """Multiscale service tests."""

    def test_homogenized_solution_of_a_parabola(self):
        """Homogenized solution of a parabola."""
        # Arrange
        problem = unit_problem()
        x = problem.domain.coordinates()[0]

        # Act
        result = self.service.solve_homogenized(problem, np.array([[2.0]]))

        # Assert
        self.assertTrue(result.success, result.message)
        np.testing.assert_allclose(result.data.values, x * (1.0 - x) / 4.0, atol=1e-10)

    def test_homogenized_tensor_must_be_elliptic(self):
        """Homogenized tensor must be elliptic."""
        # Act
        negative = self.service.solve_homogenized(unit_problem(), np.array([[-1.0]]))
        misshapen = self.service.solve_homogenized(unit_problem(), np.eye(2))

        # Assert
        self.assertEqual(negative.code, ResultCode.PRECONDITION)
        self.assertEqual(misshapen.code, ResultCode.USAGE)

    def test_identity_oscillatory_solution_is_the_homogenized_one(self):
        """Identity oscillatory solution is the homogenized one."""
        # Arrange
        problem = unit_problem()
        coefficients = IdentityFamily().build({"d": 1})

        # Act
        u_eps = self.service.solve_eps(problem, coefficients, 1 / 8)
        u_star = self.service.solve_homogenized(problem, np.eye(1))

        # Assert
        np.testing.assert_allclose(u_eps.data.values, u_star.data.values, atol=1e-12)

    def test_unresolved_scale_is_a_precondition_failure(self):
        """Unresolved scale is a precondition failure."""
        # Arrange
        coefficients = IdentityFamily().build({"d": 1})

        # Act
        result = self.service.solve_eps(unit_problem(), coefficients, 1 / 64)

        # Assert
        self.assertEqual(result.code, ResultCode.PRECONDITION)

    def test_oscillatory_problem_checks_the_dimension(self):
        """Oscillatory problem checks the dimension."""
        # Arrange
        coefficients = IdentityFamily().build({"d": 2})

        # Act
        result = self.service.solve_eps(unit_problem(), coefficients, 1 / 8)

        # Assert
        self.assertEqual(result.code, ResultCode.USAGE)

    def test_rate_fit_of_an_exact_power_law(self):
        """Rate fit of an exact power law."""
        # Arrange
        scales = [1 / 2, 1 / 4, 1 / 8, 1 / 16]
        values = [2.0 * eps**1.5 for eps in scales]

        # Act
        result = self.service.rate_fit(scales, values)

        # Assert
        self.assertAlmostEqual(result.data.slope, 1.5)
        self.assertAlmostEqual(result.data.intercept, np.log(2.0))
        self.assertAlmostEqual(result.data.band, 0.0)
        self.assertEqual(result.data.points, 4)

    def test_rate_fit_band_widens_with_noise(self):
        """Rate fit band widens with noise."""
        # Arrange
        scales = [1 / 2, 1 / 4, 1 / 8, 1 / 16]
        values = [eps * factor for eps, factor in zip(scales, (1.0, 1.3, 0.8, 1.1))]

        # Act
        result = self.service.rate_fit(scales, values)

        # Assert
        self.assertGreater(result.data.band, 0.0)
        self.assertGreater(result.data.residual, 0.0)

    def test_rate_fit_rejects_bad_input(self):
        """Rate fit rejects bad input."""
        # Act
        few = self.service.rate_fit([0.5, 0.25], [1.0, 0.5])
        mismatched = self.service.rate_fit([0.5, 0.25, 0.125], [1.0, 0.5])
        vanishing = self.service.rate_fit([0.5, 0.25, 0.125], [1.0, 0.0, 0.5])

        # Assert
        self.assertEqual(few.code, ResultCode.USAGE)
        self.assertEqual(mismatched.code, ResultCode.USAGE)
        self.assertEqual(vanishing.code, ResultCode.USAGE)

    def test_identity_hessian_does_not_scale(self):
        """Identity hessian does not scale."""
        # Arrange
        coefficients = IdentityFamily().build({"d": 1})

        # Act
        result = self.service.hessian_scaling(unit_problem(), coefficients, 2.0)

        # Assert
        self.assertTrue(result.success, result.message)
        self.assertAlmostEqual(result.data.slope, 0.0, places=8)

    def test_hessian_exponent_below_one_is_rejected(self):
        """Hessian exponent below one is rejected."""
        # Arrange
        coefficients = IdentityFamily().build({"d": 1})

        # Act
        result = self.service.hessian_scaling(unit_problem(), coefficients, 0.5)

        # Assert
        self.assertEqual(result.code, ResultCode.USAGE)

    def test_sin_drift_converges_to_the_homogenized_limit(self):
        """Sin drift converges to the homogenized limit."""
        # Arrange
        coefficients = SinDriftFamily().build({"amp": 1.0})
        cell = self.cell_service.solve_all(coefficients, TorusGrid(1, 64)).data
        problem = unit_problem()

        # Act
        result = self.service.convergence_study(problem, coefficients, cell)

        # Assert
        self.assertTrue(result.success, result.message)
        report = result.data
        self.assertEqual(report.column("eps"), list(EPS_LIST))
        self.assertGreater(report.slopes["l2_error"].slope, 0.5)
        self.assertIsNone(report.rows[0].h1_error_periodic_only)

    def test_two_scale_error_needs_the_problem_domain(self):
        """Two scale error needs the problem domain."""
        # Arrange
        coefficients = IdentityFamily().build({"d": 1})
        cell = self.cell_service.solve_all(coefficients, TorusGrid(1, 16)).data
        problem = unit_problem()
        other = Field.zeros(DomainGrid(1, 0.0, 1.0, 128))

        # Act
        result = self.service.two_scale_error(problem, cell, other, other, 1 / 8)

        # Assert
        self.assertEqual(result.code, ResultCode.USAGE)


@pytest.mark.slow
class TestMultiscaleSweeps(MultiscaleServiceTestCase):
    """Sweeps over eps from 1/4 to 1/32 at the resolutions of the shipped configurations."""

    def test_drift_hessian_grows_like_the_inverse_scale(self):
        """Hessian norm of the strong sin drift grows like 1 / eps."""
        # Arrange
        coefficients = SinDriftFamily().build({"amp": 4.0})

        # Act
        result = self.service.hessian_scaling(sine_problem(), coefficients, 2.0)

        # Assert
        self.assertTrue(result.success, result.message)
        self.assertGreaterEqual(result.data.slope, -1.15)
        self.assertLessEqual(result.data.slope, -0.85)

    def test_identity_hessian_is_flat_over_the_sweep(self):
        """Identity Hessian is flat over the sweep."""
        # Arrange
        coefficients = IdentityFamily().build({"d": 1})

        # Act
        result = self.service.hessian_scaling(sine_problem(), coefficients, 2.0)

        # Assert
        self.assertTrue(result.success, result.message)
        self.assertLess(abs(result.data.slope), 0.15)

    def test_sin_drift_converges_at_first_order(self):
        """Sin drift converges at first order."""
        # Arrange
        coefficients = SinDriftFamily().build({"amp": 1.0})
        cell = self.cell_service.solve_all(coefficients, TorusGrid(1, 128)).data

        # Act
        result = self.service.convergence_study(sine_problem(), coefficients, cell)

        # Assert
        self.assertTrue(result.success, result.message)
        slope = result.data.slopes["l2_error"].slope
        self.assertGreaterEqual(slope, 0.8)
        self.assertLessEqual(slope, 1.2)

    def test_periodic_only_expansion_stalls_at_the_defect(self):
        """The defect corrector is needed for a decreasing W1,inf two scale error."""
        # Arrange
        coefficients = SinDriftFamily().build({"amp": 1.0, "defect_amp": 0.5})
        cell = self.cell_service.solve_all(coefficients, TorusGrid(1, 128)).data
        defect_service = DefectService(
            self.mock_notifications,
            LinearSolverService(self.mock_notifications, self.settings),
            FieldCalculusService(),
            self.settings,
        )
        defect = defect_service.solve_all(coefficients, cell, BoxGrid(1, 64, 4096)).data
        domain = DomainGrid(1, -0.75, 1.25, 2048)
        problem = EpsProblem(domain, SWEEP, Field.scalar(domain, np.ones(domain.shape), "f"))

        # Act
        result = self.service.convergence_study(problem, coefficients, cell, defect)

        # Assert
        self.assertTrue(result.success, result.message)
        report = result.data
        with_corrector = report.column("w1inf_error")
        periodic_only = report.column("w1inf_error_periodic_only")
        self.assertLess(with_corrector[-1], with_corrector[0])
        self.assertLess(report.slopes["w1inf_error_periodic_only"].slope, 0.25)
        self.assertLess(with_corrector[-1], 0.5 * periodic_only[-1])
