"""Building blocks of the closed-form evaluators."""

import numpy as np


def identity(x: np.ndarray) -> np.ndarray:
    """Identity matrix at every point."""
    d = x.shape[0]
    eye = np.eye(d).reshape((d, d) + (1,) * (x.ndim - 1))
    return np.broadcast_to(eye, (d, d) + x.shape[1:]).copy()


def zero_vector(x: np.ndarray) -> np.ndarray:
    """Zero vector at every point."""
    return np.zeros(x.shape)


def radius_squared(x: np.ndarray) -> np.ndarray:
    """|x|^2."""
    return np.sum(x**2, axis=0)


def gaussian(x: np.ndarray, width: float) -> np.ndarray:
    """exp(-|x|^2 / (2 width^2))."""
    return np.exp(-radius_squared(x) / (2.0 * width**2))


def algebraic(x: np.ndarray, gamma: float) -> np.ndarray:
    """(1 + |x|^2)^(-gamma/2)."""
    return (1.0 + radius_squared(x)) ** (-0.5 * gamma)


def along(direction: int, profile: np.ndarray, d: int) -> np.ndarray:
    """Vector field profile * e_direction."""
    result = np.zeros((d,) + profile.shape)
    result[direction] = profile
    return result


def scaled_identity(profile: np.ndarray, d: int) -> np.ndarray:
    """Matrix field profile * Id."""
    result = np.zeros((d, d) + profile.shape)
    for i in range(d):
        result[i, i] = profile
    return result


def check_dimension(d: int):
    """Supported dimensions are 1, 2 and 3."""
    if d not in (1, 2, 3):
        raise ValueError(f"dimension must be 1, 2 or 3, got {d}")


def periodic(evaluator):
    """Evaluates on x mod 1 so that samples repeat exactly from cell to cell."""

    def wrapped(x: np.ndarray) -> np.ndarray:
        return evaluator(np.mod(x, 1.0))

    return wrapped
