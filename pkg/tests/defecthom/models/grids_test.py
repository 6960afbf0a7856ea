"""Necessary imports to test grid data model logic."""

import unittest

import numpy as np

from defecthom.models import BoxGrid, DomainGrid, TorusGrid, grid_from_object


class TestTorusGrid(unittest.TestCase):
    """Periodic unit cell grid tests."""

    grid: TorusGrid

    def setUp(self):
        self.grid = TorusGrid(2, 16)

    def test_samples_the_half_open_unit_cell(self):
        """Samples the half open unit cell."""
        # Act
        axis = self.grid.axis()

        # Assert
        self.assertEqual(axis[0], 0.0)
        self.assertAlmostEqual(axis[-1], 1.0 - 1.0 / 16)
        self.assertEqual(self.grid.shape, (16, 16))
        self.assertEqual(self.grid.coordinates().shape, (2, 16, 16))

    def test_rejects_odd_or_coarse_resolutions(self):
        """Rejects odd or coarse resolutions."""
        # Act & Assert
        with self.assertRaises(ValueError):
            TorusGrid(2, 15)
        with self.assertRaises(ValueError):
            TorusGrid(2, 4)

    def test_rejects_unsupported_dimensions(self):
        """Rejects unsupported dimensions."""
        # Act & Assert
        with self.assertRaises(ValueError):
            TorusGrid(4, 16)

    def test_wavenumbers_are_in_fft_order(self):
        """Wavenumbers are in FFT order."""
        # Act
        k = self.grid.wavenumbers()

        # Assert
        self.assertEqual(k[0], 0.0)
        self.assertAlmostEqual(k[1], 2.0 * np.pi)
        self.assertAlmostEqual(k[-1], -2.0 * np.pi)

    def test_round_trips_through_object(self):
        """Round trips through object."""
        # Act
        result = grid_from_object(self.grid.as_object())

        # Assert
        self.assertEqual(result, self.grid)


class TestBoxGrid(unittest.TestCase):
    """Truncated whole space grid tests."""

    grid: BoxGrid

    def setUp(self):
        self.grid = BoxGrid(2, 4, 32)

    def test_includes_boundary_nodes(self):
        """Includes boundary nodes."""
        # Act
        axis = self.grid.axis()

        # Assert
        self.assertEqual(self.grid.shape, (33, 33))
        self.assertEqual(self.grid.interior_shape, (31, 31))
        self.assertEqual(axis[0], -4.0)
        self.assertEqual(axis[-1], 4.0)
        self.assertEqual(axis[self.grid.origin_index], 0.0)

    def test_counts_nodes_per_period(self):
        """Counts nodes per period."""
        # Assert
        self.assertEqual(self.grid.nodes_per_period, 4)
        self.assertEqual(self.grid.h, 0.25)

    def test_rejects_intervals_that_split_a_period(self):
        """Rejects intervals that split a period."""
        # Act & Assert
        with self.assertRaises(ValueError):
            BoxGrid(2, 3, 32)

    def test_rejects_fractional_half_width(self):
        """Rejects fractional half width."""
        # Act & Assert
        with self.assertRaises(ValueError):
            BoxGrid(2, 2.5, 40)

    def test_doubles_at_the_same_spacing(self):
        """Doubles at the same spacing."""
        # Act
        doubled = self.grid.doubled()

        # Assert
        self.assertEqual(doubled, BoxGrid(2, 8, 64))
        self.assertEqual(doubled.h, self.grid.h)

    def test_measures_distance_to_the_boundary_in_steps(self):
        """Measures distance to the boundary in steps."""
        # Act
        distance = self.grid.boundary_distance()

        # Assert
        self.assertEqual(distance.shape, self.grid.shape)
        self.assertEqual(distance[0, 16], 0)
        self.assertEqual(distance[16, 16], 16)
        self.assertEqual(distance[3, 10], 3)

    def test_round_trips_through_object(self):
        """Round trips through object."""
        # Act
        result = grid_from_object(self.grid.as_object())

        # Assert
        self.assertEqual(result, self.grid)


class TestDomainGrid(unittest.TestCase):
    """Bounded physical domain grid tests."""

    def test_spans_the_bounds(self):
        """Spans the bounds."""
        # Arrange
        grid = DomainGrid(1, 0.0, 2.0, 64)

        # Act
        axis = grid.axis()

        # Assert
        self.assertEqual(grid.h, 2.0 / 64)
        self.assertEqual(axis[0], 0.0)
        self.assertEqual(axis[-1], 2.0)

    def test_rejects_empty_domain(self):
        """Rejects empty domain."""
        # Act & Assert
        with self.assertRaises(ValueError):
            DomainGrid(1, 1.0, 1.0, 64)

    def test_round_trips_through_object(self):
        """Round trips through object."""
        # Arrange
        grid = DomainGrid(2, -1.0, 1.0, 32)

        # Act
        result = grid_from_object(grid.as_object())

        # Assert
        self.assertEqual(result, grid)

    def test_rejects_unknown_grid_kind(self):
        """Rejects unknown grid kind."""
        # Act & Assert
        with self.assertRaises(ValueError):
            grid_from_object({"kind": "sphere", "d": 2, "n": 16})
