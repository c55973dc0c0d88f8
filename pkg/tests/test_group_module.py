import random

import numpy as np
import pytest

from liecx.errors import InvalidInputError
from liecx.oracle import fp_linalg
from liecx.oracle.group_module import (
    GModuleRep,
    algebra_action,
    coinvariants_dim,
    conjugate,
    direct_sum,
    dual_module,
    element_matrices,
    invariants_dim,
    permutation_module,
    random_invertible,
    random_module,
    sign_module,
    trivial_module,
)
from liecx.oracle.young_group import young_group


def test_generator_count_must_match():
    with pytest.raises(InvalidInputError):
        GModuleRep(2, (3,), 1, (np.ones((1, 1)),))


def test_generators_must_be_involutions():
    with pytest.raises(InvalidInputError):
        GModuleRep(5, (2,), 1, (np.full((1, 1), 2),))


def test_braid_relation_is_checked():
    # (st)^2 = -1 here, so (st)^3 != 1
    s = np.array([[0, 1], [1, 0]])
    t = np.array([[1, 0], [0, 4]])
    with pytest.raises(InvalidInputError):
        GModuleRep(5, (3,), 2, (s, t))


def test_permutation_module_matrices_are_homomorphic():
    module = permutation_module((3,), 3)
    group = young_group((3,))
    matrices = element_matrices(module, group)
    for i in range(group.order):
        for j in range(group.order):
            product = fp_linalg.matmul(matrices[i], matrices[j], 3)
            assert np.array_equal(product, matrices[group.mult[i, j]])


def test_invariants_and_coinvariants():
    assert invariants_dim(trivial_module((3,), 2)) == 1
    assert coinvariants_dim(sign_module((3,), 3)) == 0
    # the sign character is trivial in characteristic 2
    assert coinvariants_dim(sign_module((3,), 2)) == 1
    assert invariants_dim(permutation_module((2, 2), 3)) == 2
    assert coinvariants_dim(permutation_module((4,), 2)) == 1


def test_direct_sum_and_conjugate_preserve_invariants():
    rng = random.Random(3)
    module = direct_sum(trivial_module((2, 1), 3), permutation_module((2, 1), 3))
    disguised = conjugate(module, random_invertible(module.dim, 3, rng))
    assert disguised.dim == 4
    assert invariants_dim(disguised) == invariants_dim(module) == 3


def test_direct_sum_needs_same_group():
    with pytest.raises(InvalidInputError):
        direct_sum(trivial_module((2,), 2), trivial_module((1, 1), 2))


def test_dual_of_permutation_module():
    module = permutation_module((3,), 2)
    dual = dual_module(module)
    for g, h in zip(module.gens, dual.gens):
        assert np.array_equal(g, h)


def test_algebra_action_of_norm_element():
    module = permutation_module((2,), 3)
    matrices = element_matrices(module)
    norm = algebra_action(matrices, [1, 1], 3)
    assert norm.tolist() == [[1, 1], [1, 1]]


@pytest.mark.parametrize("seed", range(5))
def test_random_modules_are_valid(seed):
    rng = random.Random(seed)
    module = random_module((2, 2), 2, 6, rng)
    assert 1 <= module.dim <= 6
    assert module.to_dict()["lambda"] == [2, 2]
