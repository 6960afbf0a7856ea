"""Invariant measures, correctors and homogenized coefficients for periodic media with defects."""

__version__ = "0.1.0"
