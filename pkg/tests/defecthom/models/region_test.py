"""Necessary imports to test region logic."""

import unittest

import numpy as np

from defecthom.models import BoxGrid, Region, TorusGrid


class TestRegion(unittest.TestCase):
    """Norm region tests."""

    grid: BoxGrid

    def setUp(self):
        self.grid = BoxGrid(1, 4, 16)

    def test_whole_selects_every_node(self):
        """Whole selects every node."""
        # Act
        mask = Region.whole().mask(self.grid)

        # Assert
        self.assertTrue(np.all(mask))

    def test_ball_is_closed(self):
        """Ball is closed."""
        # Act
        mask = Region.ball(1.0).mask(self.grid)

        # Assert
        np.testing.assert_array_equal(self.grid.axis()[mask], [-1.0, -0.5, 0.0, 0.5, 1.0])

    def test_annulus_is_half_open(self):
        """Annulus is half open."""
        # Act
        mask = Region.annulus(1.0, 2.0).mask(self.grid)

        # Assert
        np.testing.assert_array_equal(self.grid.axis()[mask], [-1.5, -1.0, 1.0, 1.5])

    def test_interior_drops_the_collar(self):
        """Interior drops the collar."""
        # Act
        mask = Region.interior(1.0).mask(self.grid)

        # Assert
        axis = self.grid.axis()[mask]
        self.assertEqual(axis[0], -3.0)
        self.assertEqual(axis[-1], 3.0)

    def test_interior_needs_a_box(self):
        """Interior needs a box."""
        # Act & Assert
        with self.assertRaises(ValueError):
            Region.interior(0.1).mask(TorusGrid(1, 16))

    def test_rejects_inverted_annulus(self):
        """Rejects inverted annulus."""
        # Act & Assert
        with self.assertRaises(ValueError):
            Region.annulus(2.0, 1.0)

    def test_describes_itself(self):
        """Describes itself."""
        # Assert
        self.assertEqual(Region.whole().describe(), "whole grid")
        self.assertEqual(Region.ball(2.0).describe(), "ball |x| <= 2")
        self.assertEqual(Region.annulus(1.0, 2.0).describe(), "annulus 1 <= |x| < 2")
