"""Second order finite differences on closed boxes with homogeneous Dirichlet data."""

from functools import reduce

import numpy as np
from scipy import sparse

from defecthom.models import NodeGrid


class BoxOperators:
    """
    Sparse interior matrices and full-node array stencils on a NodeGrid.

    Matrices act on the (n - 1)^d interior unknowns flattened in C order, with
    zero boundary values. Array stencils act on full node arrays and leave the
    boundary entries they cannot reach at zero.
    """

    def __init__(self, grid: NodeGrid):
        self.grid = grid
        self.h = grid.h
        size = grid.n - 1
        h = self.h
        self._identity = sparse.identity(size, format="csr")
        self._first = sparse.diags([-1.0, 1.0], [-1, 1], shape=(size, size)) / (2.0 * h)
        self._second = sparse.diags([1.0, -2.0, 1.0], [-1, 0, 1], shape=(size, size)) / h**2
        self._face = (
            sparse.eye(grid.n, size, 0) - sparse.eye(grid.n, size, -1)
        ).tocsr() / h

    @property
    def unknowns(self) -> int:
        """Number of interior unknowns."""
        return (self.grid.n - 1) ** self.grid.d

    def _along(self, axis: int, factor: sparse.spmatrix) -> sparse.csr_matrix:
        parts = [factor if index == axis else self._identity for index in range(self.grid.d)]
        return reduce(lambda left, right: sparse.kron(left, right, format="csr"), parts).tocsr()

    def partial_matrix(self, j: int) -> sparse.csr_matrix:
        """Centered first difference along axis j."""
        return self._along(j, self._first)

    def second_matrix(self, i: int, j: int) -> sparse.csr_matrix:
        """Three point second difference (i == j) or four point mixed difference."""
        if i == j:
            return self._along(i, self._second)
        return (self.partial_matrix(i) @ self.partial_matrix(j)).tocsr()

    def gradient_to_faces(self, k: int) -> sparse.csr_matrix:
        """Differences onto the faces between neighbours along axis k."""
        factors = [self._face if index == k else self._identity for index in range(self.grid.d)]
        return reduce(lambda left, right: sparse.kron(left, right, format="csr"), factors).tocsr()

    def restrict(self, values: np.ndarray) -> np.ndarray:
        """Interior entries of full node arrays, flattened per leading component."""
        lead = values.shape[: values.ndim - self.grid.d]
        interior = values[(Ellipsis,) + self.grid.interior()]
        return interior.reshape(lead + (-1,))

    def extend(self, flat: np.ndarray) -> np.ndarray:
        """Full node array with zero boundary from interior unknowns."""
        values = np.zeros(self.grid.shape)
        values[self.grid.interior()] = flat.reshape(self.grid.interior_shape)
        return values

    def nondivergence_matrix(self, a: np.ndarray, b: np.ndarray) -> sparse.csr_matrix:
        """-a_ij d_ij + b_j d_j from full node coefficient arrays."""
        d = self.grid.d
        a_int = self.restrict(a)
        b_int = self.restrict(b)
        matrix = sparse.csr_matrix((self.unknowns, self.unknowns))
        for i in range(d):
            for j in range(d):
                matrix = matrix - sparse.diags(a_int[i, j]) @ self.second_matrix(i, j)
            matrix = matrix + sparse.diags(b_int[i]) @ self.partial_matrix(i)
        return matrix.tocsr()

    def adjoint_matrix(self, a: np.ndarray, b: np.ndarray) -> sparse.csr_matrix:
        """Exact discrete adjoint of nondivergence_matrix."""
        return self.nondivergence_matrix(a, b).T.tocsr()

    def divergence_form_matrix(self, A: np.ndarray) -> sparse.csr_matrix:
        """-div(A grad u) with arithmetic face means on the diagonal terms."""
        d = self.grid.d
        matrix = sparse.csr_matrix((self.unknowns, self.unknowns))
        for k in range(d):
            faces = self._face_average(A[k, k], k)
            gradient = self.gradient_to_faces(k)
            matrix = matrix + gradient.T @ sparse.diags(faces) @ gradient
        for i in range(d):
            for j in range(d):
                if i != j:
                    coefficient = sparse.diags(self.restrict(A[i, j]))
                    matrix = matrix - self.partial_matrix(i) @ coefficient @ self.partial_matrix(j)
        return matrix.tocsr()

    def dirichlet_laplacian(self) -> sparse.csr_matrix:
        """-Laplacian with zero boundary values."""
        matrix = sparse.csr_matrix((self.unknowns, self.unknowns))
        for k in range(self.grid.d):
            matrix = matrix - self.second_matrix(k, k)
        return matrix.tocsr()

    def _face_average(self, values: np.ndarray, k: int) -> np.ndarray:
        d = self.grid.d
        lower = [slice(1, -1)] * d
        upper = [slice(1, -1)] * d
        lower[k] = slice(0, -1)
        upper[k] = slice(1, None)
        return (0.5 * (values[tuple(lower)] + values[tuple(upper)])).reshape(-1)

    def partial_nodes(self, values: np.ndarray, j: int) -> np.ndarray:
        """Centered difference along axis j at every node off the j-boundary."""
        d = self.grid.d
        axis = values.ndim - d + j
        result = np.zeros_like(values)
        target = [slice(None)] * values.ndim
        forward = [slice(None)] * values.ndim
        backward = [slice(None)] * values.ndim
        target[axis] = slice(1, -1)
        forward[axis] = slice(2, None)
        backward[axis] = slice(0, -2)
        result[tuple(target)] = (values[tuple(forward)] - values[tuple(backward)]) / (2.0 * self.h)
        return result

    def second_nodes(self, values: np.ndarray, i: int, j: int) -> np.ndarray:
        """Three point or four point second difference matching second_matrix."""
        if i != j:
            return self.partial_nodes(self.partial_nodes(values, j), i)
        d = self.grid.d
        axis = values.ndim - d + i
        result = np.zeros_like(values)
        target = [slice(None)] * values.ndim
        forward = [slice(None)] * values.ndim
        backward = [slice(None)] * values.ndim
        target[axis] = slice(1, -1)
        forward[axis] = slice(2, None)
        backward[axis] = slice(0, -2)
        result[tuple(target)] = (
            values[tuple(forward)] - 2.0 * values[tuple(target)] + values[tuple(backward)]
        ) / self.h**2
        return result

    def nondivergence_nodes(self, a: np.ndarray, b: np.ndarray, u: np.ndarray) -> np.ndarray:
        """-a_ij d_ij u + b_j d_j u at interior nodes."""
        d = self.grid.d
        result = np.zeros(self.grid.shape)
        for i in range(d):
            for j in range(d):
                result -= a[i, j] * self.second_nodes(u, i, j)
            result += b[i] * self.partial_nodes(u, i)
        return self._interior_only(result)

    def divergence_form_nodes(self, A: np.ndarray, u: np.ndarray) -> np.ndarray:
        """-div(A grad u) at interior nodes with the stencil of divergence_form_matrix."""
        d = self.grid.d
        result = np.zeros(self.grid.shape)
        for k in range(d):
            lower = [slice(None)] * d
            upper = [slice(None)] * d
            lower[k] = slice(0, -1)
            upper[k] = slice(1, None)
            faces = 0.5 * (A[k, k][tuple(lower)] + A[k, k][tuple(upper)])
            flux = faces * (u[tuple(upper)] - u[tuple(lower)]) / self.h
            center = [slice(None)] * d
            center[k] = slice(1, -1)
            result[tuple(center)] -= (flux[tuple(upper)] - flux[tuple(lower)]) / self.h
        for i in range(d):
            for j in range(d):
                if i != j:
                    result -= self.partial_nodes(A[i, j] * self.partial_nodes(u, j), i)
        return self._interior_only(result)

    def _interior_only(self, values: np.ndarray) -> np.ndarray:
        result = np.zeros_like(values)
        interior = self.grid.interior()
        result[interior] = values[interior]
        return result
