"""Dyadic shells and power law fits."""

import math
from typing import Optional

import numpy as np


def dyadic_radii(max_radius: float) -> list[float]:
    """R_k = 2^k for k >= 0 and R_k < max_radius."""
    radii: list[float] = []
    radius = 1.0
    while radius < max_radius - 1e-12:
        radii.append(radius)
        radius *= 2.0
    return radii


def whole_shell_reach(half_width: float) -> float:
    """Largest power of two not above half_width; shells below it end inside the box."""
    if half_width < 1.0:
        return 0.0
    return 2.0 ** math.floor(math.log2(half_width) + 1e-12)


def fit_power_law(
    radii: list[float], values: list[float]
) -> tuple[Optional[float], Optional[float]]:
    """Least squares slope of log value against log radius and the RMS fit residual.

    Non-positive values are left out; fewer than two usable points give (None, None).
    """
    usable = [(r, v) for r, v in zip(radii, values) if v > 0.0 and math.isfinite(v)]
    if len(usable) < 2:
        return None, None
    x = np.log([r for r, _ in usable])
    y = np.log([v for _, v in usable])
    slope, intercept = np.polyfit(x, y, 1)
    residual = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    return float(slope), residual
