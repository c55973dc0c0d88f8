"""Dense linear algebra over the prime field F_p

Matrices are numpy int64 arrays with entries kept in [0, p). Elimination uses
the first nonzero entry of each column as pivot, so results are deterministic.
Products go through float64 BLAS, exact while inner dimension times (p-1)^2
stays below 2^53.
"""
from typing import List, Optional, Tuple

import numpy as np

from liecx.errors import InvalidInputError


def as_fp(matrix, p: int) -> np.ndarray:
    """Copy of matrix reduced into [0, p)"""
    return np.array(matrix, dtype=np.int64) % p


def row_reduce(matrix, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and pivot columns"""
    reduced = as_fp(matrix, p)
    if reduced.ndim != 2:
        raise InvalidInputError(f"expected a 2-dimensional matrix, got shape {reduced.shape}")
    rows, cols = reduced.shape
    pivots: List[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nonzero = np.flatnonzero(reduced[row:, col])
        if nonzero.size == 0:
            continue
        found = row + int(nonzero[0])
        if found != row:
            reduced[[row, found]] = reduced[[found, row]]
        inverse = pow(int(reduced[row, col]), -1, p)
        reduced[row] = (reduced[row] * inverse) % p
        column = reduced[:, col].copy()
        column[row] = 0
        targets = np.flatnonzero(column)
        if targets.size:
            reduced[targets] = (reduced[targets] - np.outer(column[targets], reduced[row])) % p
        pivots.append(col)
        row += 1
    return reduced, pivots


def rank(matrix, p: int) -> int:
    """Rank over F_p"""
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0
    return len(row_reduce(matrix, p)[1])


def nullspace(matrix, p: int) -> np.ndarray:
    """Basis (as rows) of {v : matrix @ v = 0}"""
    matrix = np.asarray(matrix, dtype=np.int64)
    cols = matrix.shape[1]
    if matrix.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    reduced, pivots = row_reduce(matrix, p)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, col in enumerate(free):
        basis[k, col] = 1
        for i, pivot in enumerate(pivots):
            basis[k, pivot] = (-reduced[i, col]) % p
    return basis


def solve(matrix, rhs, p: int) -> Optional[np.ndarray]:
    """One solution of matrix @ x = rhs, or None when the system is inconsistent"""
    matrix = np.asarray(matrix, dtype=np.int64)
    rhs = np.asarray(rhs, dtype=np.int64).reshape(-1, 1)
    cols = matrix.shape[1]
    reduced, pivots = row_reduce(np.hstack([matrix, rhs]), p)
    if pivots and pivots[-1] == cols:
        return None
    solution = np.zeros(cols, dtype=np.int64)
    for i, pivot in enumerate(pivots):
        solution[pivot] = reduced[i, cols]
    return solution


def inverse(matrix, p: int) -> np.ndarray:
    """Inverse of a square matrix over F_p"""
    matrix = as_fp(matrix, p)
    size = matrix.shape[0]
    if matrix.shape != (size, size):
        raise InvalidInputError(f"cannot invert a non-square matrix of shape {matrix.shape}")
    reduced, pivots = row_reduce(np.hstack([matrix, np.eye(size, dtype=np.int64)]), p)
    if pivots[:size] != list(range(size)):
        raise InvalidInputError("matrix is singular over F_p")
    return reduced[:, size:]


def matmul(a, b, p: int) -> np.ndarray:
    """Product a @ b reduced mod p"""
    left = (np.asarray(a, dtype=np.int64) % p).astype(np.float64)
    right = (np.asarray(b, dtype=np.int64) % p).astype(np.float64)
    return np.rint(left @ right).astype(np.int64) % p


def matrix_power(matrix, exponent: int, modulus: int) -> np.ndarray:
    """matrix**exponent with entries reduced mod an arbitrary modulus"""
    result = np.eye(matrix.shape[0], dtype=np.int64)
    base = np.array(matrix, dtype=np.int64) % modulus
    while exponent:
        if exponent & 1:
            result = (result @ base) % modulus
        base = (base @ base) % modulus
        exponent >>= 1
    return result


class Subspace:
    """A subspace of F_p^width held as a reduced row echelon basis, grown incrementally"""

    def __init__(self, width: int, p: int, vectors=None):
        """Start from the span of vectors, or the zero subspace"""
        self.width = width
        self.p = p
        self.rows = np.zeros((0, width), dtype=np.int64)
        self.pivots: List[int] = []
        if vectors is not None:
            self.extend(vectors)

    @property
    def dim(self) -> int:
        """Dimension of the subspace"""
        return len(self.pivots)

    def reduce(self, vectors) -> np.ndarray:
        """Remainder of a vector, or of each row of a block, after clearing every pivot column"""
        vectors = np.asarray(vectors, dtype=np.int64) % self.p
        if self.pivots:
            vectors = (vectors - matmul(vectors[..., self.pivots], self.rows, self.p)) % self.p
        return vectors

    def __contains__(self, vector) -> bool:
        return not np.any(self.reduce(vector))

    def gain(self, vectors) -> int:
        """How much the dimension would grow if vectors were added"""
        block = np.asarray(vectors, dtype=np.int64).reshape(-1, self.width)
        return rank(self.reduce(block), self.p)

    def extend(self, vectors) -> None:
        """Add vectors, eliminating only the part not already in the span"""
        block = np.asarray(vectors, dtype=np.int64).reshape(-1, self.width)
        residual = self.reduce(block)
        residual = residual[np.any(residual, axis=1)]
        if residual.shape[0] == 0:
            return
        reduced, pivots = row_reduce(residual, self.p)
        fresh = reduced[:len(pivots)]
        rows = self.rows
        if self.pivots:
            rows = (rows - matmul(rows[:, pivots], fresh, self.p)) % self.p
        merged = self.pivots + pivots
        order = np.argsort(merged, kind="stable")
        self.rows = np.vstack([rows, fresh])[order]
        self.pivots = [merged[i] for i in order]
