"""Periodic extension of cell samples onto box and domain grids."""

import numpy as np
from scipy import signal

from defecthom.models import NodeGrid, TorusGrid


def resample_cell(values: np.ndarray, cell: TorusGrid, points_per_period: int) -> np.ndarray:
    """Cell samples at points_per_period nodes per axis, by striding or Fourier resampling."""
    d = cell.d
    result = values
    for axis in range(values.ndim - d, values.ndim):
        if points_per_period == cell.n:
            continue
        if cell.n % points_per_period == 0:
            index = [slice(None)] * values.ndim
            index[axis] = slice(None, None, cell.n // points_per_period)
            result = result[tuple(index)]
        else:
            result = signal.resample(result, points_per_period, axis=axis)
    return np.asarray(result)


def tile_periodic(
    values: np.ndarray, cell: TorusGrid, target: NodeGrid, scale: float = 1.0
) -> np.ndarray:
    """Samples of x -> v(x / scale) on the target nodes for a 1-periodic v given on the cell.

    The target spacing must divide the scaled period and the target's lower bound.
    """
    ratio = scale / target.h
    points = int(round(ratio))
    if points < 1 or abs(ratio - points) > 1e-9 * max(1.0, ratio):
        raise ValueError(f"period {scale} is not a whole number of steps {target.h}")
    lower, _ = target.bounds()
    offset_ratio = lower / target.h
    offset = int(round(offset_ratio))
    if abs(offset_ratio - offset) > 1e-9 * max(1.0, abs(offset_ratio)):
        raise ValueError(f"lower bound {lower} is not on the step {target.h}")
    period = resample_cell(values, cell, points)
    index = np.mod(offset + np.arange(target.n + 1), points)
    lead = values.ndim - cell.d
    result = period
    for axis in range(cell.d):
        result = np.take(result, index, axis=lead + axis)
    return result
