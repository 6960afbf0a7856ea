"""Necessary imports for export."""

from .box_background import BoxBackground
from .box_operators import BoxOperators
from .periodic_tiling import resample_cell, tile_periodic
from .spectral_operators import SpectralOperators

__all__ = ["BoxBackground", "BoxOperators", "SpectralOperators", "resample_cell", "tile_periodic"]
