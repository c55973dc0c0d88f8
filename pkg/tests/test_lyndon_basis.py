import random
from itertools import permutations
from math import factorial

import numpy as np
import pytest

from liecx.errors import CapacityError, InvalidInputError
from liecx.freelie.lyndon_basis import (
    LieElement,
    _bracket_standard,
    _expansion_matrix,
    combination_by_expansion,
    combination_normal_form,
    expand_associative,
    foliage,
    format_tree,
    lyndon_basis,
    normal_form,
    normal_form_by_expansion,
    parse_tree,
    random_tree,
    standard_bracketing,
)
from liecx.oracle import fp_linalg


@pytest.mark.parametrize("n", range(1, 8))
def test_basis_size(n):
    basis = lyndon_basis(n)
    assert len(basis) == factorial(n - 1)
    assert all(foliage(tree)[0] == 1 for tree in basis)


def test_basis_of_three():
    assert lyndon_basis(3) == [(1, (2, 3)), ((1, 3), 2)]


def test_standard_bracketing():
    assert standard_bracketing((1, 3, 2, 4)) == ((1, 3), (2, 4))
    assert standard_bracketing((1, 2, 4, 3)) == (1, ((2, 4), 3))


def test_parse_and_format():
    tree = parse_tree("[[1, 2],3]")
    assert tree == ((1, 2), 3)
    assert format_tree(tree) == "[[1,2],3]"
    assert parse_tree("4") == 4


@pytest.mark.parametrize("text", ["[1,2", "[1,2,3]", "(1,2)", ""])
def test_parse_errors(text):
    with pytest.raises(InvalidInputError):
        parse_tree(text)


def test_jacobi_rewrite():
    element = normal_form(((1, 2), 3), 3, 5)
    assert element.coeffs == ((0, 1), (1, 1))
    assert str(element) == "[1,[2,3]] + [[1,3],2]"


def test_antisymmetry():
    assert normal_form((2, 1), 2, 3).coeffs == ((0, 2),)
    assert normal_form((2, 1), 2, 2).coeffs == ((0, 1),)


def test_basis_elements_are_their_own_normal_form():
    for i, tree in enumerate(lyndon_basis(5)):
        assert normal_form(tree, 5, 7).coeffs == ((i, 1),)


def test_self_bracket_vanishes_in_expansion():
    assert all(coeff == 0 for coeff in expand_associative(((1, 2), (1, 2))).values())


@pytest.mark.parametrize("p", [2, 3, 5])
def test_normal_forms_agree_on_random_trees(p):
    rng = random.Random(7 + p)
    for _ in range(40):
        n = rng.randint(1, 6)
        tree = random_tree(n, rng)
        assert normal_form(tree, n, p) == normal_form_by_expansion(tree, n, p)


@pytest.mark.parametrize("tree,n", [((1, 1), 2), ((1, 2), 3), ((1, (2, 4)), 3)])
def test_tree_must_use_each_letter_once(tree, n):
    with pytest.raises(InvalidInputError):
        normal_form(tree, n, 2)


def test_arity_limit(monkeypatch):
    monkeypatch.setattr("liecx.config.MAX_LIE_ARITY", 4)
    with pytest.raises(CapacityError):
        lyndon_basis(5)


def test_element_vector_round_trip():
    element = LieElement(4, 3, ((0, 4), (5, 2), (2, 3)))
    assert element.coeffs == ((0, 1), (5, 2))
    assert LieElement.from_vector(4, 3, element.to_vector()) == element
    with pytest.raises(InvalidInputError):
        LieElement(3, 2, ((2, 1),))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_normal_form_is_linear(p):
    rng = random.Random(11 * p)
    for _ in range(30):
        n = rng.randint(2, 5)
        first, second = random_tree(n, rng), random_tree(n, rng)
        a, b = rng.randrange(p), rng.randrange(p)
        words = {word: i for i, word in enumerate(permutations(range(1, n + 1)))}
        expansion = np.zeros(factorial(n), dtype=np.int64)
        for tree, coeff in ((first, a), (second, b)):
            for word, c in expand_associative(tree).items():
                expansion[words[word]] += coeff * c
        solved = fp_linalg.solve(_expansion_matrix(n, p), expansion % p, p)
        summed = (a * normal_form(first, n, p).to_vector() + b * normal_form(second, n, p).to_vector()) % p
        assert solved.tolist() == summed.tolist()
        terms = ((first, a), (second, b))
        assert combination_by_expansion(terms, n, p) == combination_normal_form(terms, n, p)


def test_combination_cancels():
    terms = (((1, 2), 1), ((2, 1), 1))
    assert combination_normal_form(terms, 2, 3).coeffs == ()
    assert combination_by_expansion(terms, 2, 3).coeffs == ()


def test_combination_rejects_bad_trees():
    with pytest.raises(InvalidInputError):
        combination_by_expansion((((1, 2), 1), ((1, 3), 1)), 2, 2)


def test_bracket_cache_is_bounded():
    assert _bracket_standard.cache_info().maxsize is not None
