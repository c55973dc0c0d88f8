import numpy as np
import pytest

from liecx.errors import InvalidInputError
from liecx.oracle import fp_linalg


def test_rank_depends_on_the_prime():
    matrix = [[1, 1], [1, 3]]
    assert fp_linalg.rank(matrix, 2) == 1
    assert fp_linalg.rank(matrix, 3) == 2


def test_row_reduce():
    reduced, pivots = fp_linalg.row_reduce([[0, 2, 4], [1, 1, 1]], 5)
    assert pivots == [0, 1]
    assert reduced.tolist() == [[1, 0, 4], [0, 1, 2]]


def test_nullspace_is_annihilated():
    matrix = np.array([[1, 2, 0, 1], [0, 1, 1, 2]])
    basis = fp_linalg.nullspace(matrix, 3)
    assert basis.shape == (2, 4)
    assert not np.any(fp_linalg.matmul(matrix, basis.T, 3))
    assert fp_linalg.rank(basis, 3) == 2


def test_nullspace_of_empty_matrix():
    assert fp_linalg.nullspace(np.zeros((0, 3), dtype=np.int64), 2).tolist() == np.eye(3, dtype=int).tolist()


def test_solve():
    matrix = [[1, 1], [0, 1]]
    solution = fp_linalg.solve(matrix, [2, 1], 3)
    assert fp_linalg.matmul(matrix, solution, 3).tolist() == [2, 1]
    assert fp_linalg.solve([[1, 1], [1, 1]], [0, 1], 3) is None


def test_inverse():
    matrix = [[2, 1], [1, 1]]
    inverse = fp_linalg.inverse(matrix, 5)
    assert fp_linalg.matmul(matrix, inverse, 5).tolist() == [[1, 0], [0, 1]]
    with pytest.raises(InvalidInputError):
        fp_linalg.inverse([[1, 1], [1, 1]], 5)
    with pytest.raises(InvalidInputError):
        fp_linalg.inverse([[1, 1, 0], [0, 1, 1]], 5)


def test_matrix_power_with_composite_modulus():
    assert fp_linalg.matrix_power(np.array([[1, 1], [0, 1]]), 5, 4).tolist() == [[1, 1], [0, 1]]
    assert fp_linalg.matrix_power(np.array([[2]]), 10, 9).tolist() == [[1024 % 9]]


def test_subspace_grows_incrementally():
    space = fp_linalg.Subspace(3, 2)
    assert space.dim == 0
    space.extend([1, 1, 0])
    space.extend([[0, 1, 1], [1, 0, 1]])
    assert space.dim == 2
    assert [1, 0, 1] in space
    assert [1, 0, 0] not in space
    assert not np.any(space.reduce([0, 1, 1]))


def test_subspace_stays_reduced_while_growing():
    rng = np.random.default_rng(7)
    vectors = rng.integers(0, 5, size=(9, 12))
    space = fp_linalg.Subspace(12, 5)
    for start in range(0, 9, 3):
        space.extend(vectors[start:start + 3])
    reduced, pivots = fp_linalg.row_reduce(vectors, 5)
    assert space.pivots == pivots
    assert space.rows.tolist() == reduced[:len(pivots)].tolist()


def test_subspace_gain():
    space = fp_linalg.Subspace(3, 3, [[1, 0, 0]])
    assert space.gain([[2, 0, 0], [0, 1, 1], [1, 2, 2]]) == 1
    assert space.dim == 1
    assert space.reduce([[1, 1, 0], [2, 0, 1]]).tolist() == [[0, 1, 0], [0, 0, 1]]


def test_matmul_reduces_negative_entries():
    assert fp_linalg.matmul([[-1, 2]], [[3], [-4]], 7).tolist() == [[3]]
