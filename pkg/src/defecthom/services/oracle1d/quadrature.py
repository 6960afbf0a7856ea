"""Composite Gauss-Legendre quadrature on the real line."""

from typing import Callable

import numpy as np

ORDER = 16
PANEL_WIDTH = 1.0 / 16.0

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(ORDER)


def integrate(
    f: Callable[[np.ndarray], np.ndarray], lower: float, upper: float, panels: int = 16
) -> float:
    """Integral of f over [lower, upper] with equal panels of ORDER Gauss points each."""
    if upper == lower:
        return 0.0
    edges = np.linspace(lower, upper, panels + 1)
    half = 0.5 * np.diff(edges)
    centers = 0.5 * (edges[:-1] + edges[1:])
    points = centers[:, None] + half[:, None] * _NODES[None, :]
    values = np.asarray(f(points), dtype=np.float64)
    return float(np.sum(half * (values @ _WEIGHTS)))


def cumulative_integral(
    f: Callable[[np.ndarray], np.ndarray],
    points: np.ndarray,
    anchor: float = 0.0,
    panel_width: float = PANEL_WIDTH,
) -> np.ndarray:
    """Integral of f from anchor to every point, shaped like points.

    Consecutive sorted points are joined by panels no wider than panel_width.
    """
    points = np.asarray(points, dtype=np.float64)
    flat = points.ravel()
    knots = np.unique(np.concatenate([flat, [anchor]]))
    if knots.size == 1:
        return np.zeros(points.shape)

    lengths = np.diff(knots)
    pieces = np.maximum(1, np.ceil(lengths / panel_width - 1e-9)).astype(int)
    interval = np.repeat(np.arange(lengths.size), pieces)
    local = np.arange(interval.size) - np.repeat(np.cumsum(pieces) - pieces, pieces)
    width = lengths[interval] / pieces[interval]
    centers = knots[interval] + (local + 0.5) * width
    nodes = centers[:, None] + 0.5 * width[:, None] * _NODES[None, :]
    panel = 0.5 * width * (np.asarray(f(nodes), dtype=np.float64) @ _WEIGHTS)

    per_interval = np.bincount(interval, weights=panel, minlength=lengths.size)
    running = np.concatenate([[0.0], np.cumsum(per_interval)])
    origin = running[np.searchsorted(knots, anchor)]
    return (running[np.searchsorted(knots, flat)] - origin).reshape(points.shape)


def cell_average(f: Callable[[np.ndarray], np.ndarray]) -> float:
    """Average of f over the unit period [0, 1]."""
    return integrate(f, 0.0, 1.0)


def half_line_integral(
    f: Callable[[np.ndarray], np.ndarray],
    direction: float,
    tolerance: float = 1e-14,
    max_doublings: int = 64,
) -> tuple[float, bool]:
    """Integral of f over [0, +inf) (direction 1) or (-inf, 0] (direction -1).

    The line is cut into [0, 1] and dyadic segments [2^k, 2^(k+1)]; the integral
    is declared convergent once two consecutive segments fall below the tolerance
    relative to the running total. Returns the partial sum and the verdict.
    """
    sign = 1.0 if direction > 0 else -1.0

    def mirrored(x: np.ndarray) -> np.ndarray:
        return f(sign * x)

    total = integrate(mirrored, 0.0, 1.0)
    quiet = 0
    lower = 1.0
    for _ in range(max_doublings):
        segment = integrate(mirrored, lower, 2.0 * lower, panels=32)
        total += segment
        lower *= 2.0
        if not np.isfinite(total):
            return float(total), False
        if abs(segment) <= tolerance * max(1.0, abs(total)):
            quiet += 1
            if quiet == 2:
                return float(total), True
        else:
            quiet = 0
    return float(total), False
