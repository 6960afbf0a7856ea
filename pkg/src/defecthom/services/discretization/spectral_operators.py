"""Fourier differentiation on the periodic unit cell."""

import numpy as np
from scipy import fft

from defecthom.models import TorusGrid


class SpectralOperators:
    """
    Spectral derivatives of samples on a TorusGrid.

    Arrays may carry leading component axes; the last d axes are the nodes.
    Odd derivatives and mixed second derivatives drop the Nyquist mode, so the
    discrete first derivative is an antisymmetric matrix and the discrete
    adjoint of every operator below is its transpose.
    """

    def __init__(self, grid: TorusGrid):
        self.grid = grid
        d = grid.d
        k = grid.wavenumbers()
        odd = k.copy()
        odd[grid.n // 2] = 0.0
        self._odd: list[np.ndarray] = []
        self._square: list[np.ndarray] = []
        for axis in range(d):
            shape = [1] * d
            shape[axis] = grid.n
            self._odd.append(odd.reshape(shape))
            self._square.append((k**2).reshape(shape))
        self._axes = tuple(range(-d, 0))

    def _forward(self, values: np.ndarray) -> np.ndarray:
        return fft.fftn(values, axes=self._axes)

    def _backward(self, values: np.ndarray) -> np.ndarray:
        return fft.ifftn(values, axes=self._axes).real

    def _second_symbol(self, i: int, j: int) -> np.ndarray:
        if i == j:
            return -self._square[i]
        return -(self._odd[i] * self._odd[j])

    def partial(self, values: np.ndarray, j: int) -> np.ndarray:
        """First derivative along axis j."""
        return self._backward(1j * self._odd[j] * self._forward(values))

    def second(self, values: np.ndarray, i: int, j: int) -> np.ndarray:
        """Second derivative along axes i and j."""
        return self._backward(self._second_symbol(i, j) * self._forward(values))

    def gradient(self, values: np.ndarray) -> np.ndarray:
        """Gradient of a scalar sample, shape (d, ...)."""
        transformed = self._forward(values)
        return np.stack(
            [self._backward(1j * self._odd[j] * transformed) for j in range(self.grid.d)]
        )

    def hessian(self, values: np.ndarray) -> np.ndarray:
        """Hessian of a scalar sample, shape (d, d, ...), exactly symmetric."""
        d = self.grid.d
        transformed = self._forward(values)
        result = np.empty((d, d) + self.grid.shape)
        for i in range(d):
            for j in range(i, d):
                result[i, j] = self._backward(self._second_symbol(i, j) * transformed)
                result[j, i] = result[i, j]
        return result

    def divergence(self, values: np.ndarray) -> np.ndarray:
        """Divergence of a vector, or the column divergence sum_i d_i M_ij of a matrix."""
        d = self.grid.d
        if values.ndim == d + 1:
            return sum(self.partial(values[j], j) for j in range(d))
        return np.stack([sum(self.partial(values[i, j], i) for i in range(d)) for j in range(d)])

    def laplacian(self, values: np.ndarray) -> np.ndarray:
        """Laplacian keeping the Nyquist mode."""
        symbol = sum(self._square)
        return self._backward(-symbol * self._forward(values))

    def inverse_laplacian(self, values: np.ndarray) -> np.ndarray:
        """Zero-mean solution of -Laplacian u = f for zero-mean f."""
        symbol = sum(self._square) * np.ones(self.grid.shape)
        inverse = np.zeros_like(symbol)
        np.divide(1.0, symbol, out=inverse, where=symbol > 0.0)
        return self._backward(inverse * self._forward(values))

    def constant_inverse(self, a_bar: np.ndarray, values: np.ndarray) -> np.ndarray:
        """Zero-mean solution of -a_bar : D^2 u = f for a constant symmetric positive a_bar."""
        d = self.grid.d
        symbol = np.zeros(self.grid.shape)
        for i in range(d):
            for j in range(d):
                symbol = symbol - a_bar[i, j] * self._second_symbol(i, j)
        inverse = np.zeros_like(symbol)
        np.divide(1.0, symbol, out=inverse, where=np.abs(symbol) > 1e-12)
        return self._backward(inverse * self._forward(values))

    def nondivergence(self, a: np.ndarray, b: np.ndarray, u: np.ndarray) -> np.ndarray:
        """-a_ij d_ij u + b_j d_j u."""
        d = self.grid.d
        hessian = self.hessian(u)
        gradient = self.gradient(u)
        result = np.zeros(self.grid.shape)
        for i in range(d):
            result -= np.sum(a[i] * hessian[i], axis=0)
        return result + np.sum(b * gradient, axis=0)

    def adjoint(self, a: np.ndarray, b: np.ndarray, m: np.ndarray) -> np.ndarray:
        """-d_ij (a_ij m) - d_j (b_j m), the transpose of nondivergence."""
        d = self.grid.d
        result = np.zeros(self.grid.shape)
        for i in range(d):
            for j in range(d):
                result -= self.second(a[i, j] * m, i, j)
            result -= self.partial(b[i] * m, i)
        return result

    def mean(self, values: np.ndarray) -> np.ndarray | float:
        """Cell average over the node axes."""
        averaged = np.mean(values, axis=self._axes)
        return float(averaged) if np.ndim(averaged) == 0 else averaged
