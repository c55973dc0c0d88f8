"""Multilinear free Lie module Lie(n) over F_p in the Lyndon bracket basis

A bracket tree is an int leaf or a pair (left, right). The multilinear Lyndon
words on 1..n are the words starting with 1; each is bracketed at its longest
proper Lyndon suffix. Arbitrary trees are straightened by antisymmetry and the
Jacobi identity over the integers and reduced mod p afterwards.
"""
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np
import pyparsing as pp

from liecx import config
from liecx.errors import CapacityError, InvalidInputError, OracleError
from liecx.oracle import fp_linalg
from liecx.validators.input_validator import require_positive, require_prime

BracketTree = Union[int, Tuple['BracketTree', 'BracketTree']]
Combination = Tuple[Tuple[BracketTree, int], ...]


def foliage(tree: BracketTree) -> Tuple[int, ...]:
    """Leaves of the tree, left to right"""
    if isinstance(tree, int):
        return (tree,)
    return foliage(tree[0]) + foliage(tree[1])


def standard_bracketing(word: Sequence[int]) -> BracketTree:
    """Standard bracketing of a Lyndon word with distinct letters"""
    word = tuple(word)
    if len(word) == 1:
        return word[0]
    # the longest proper Lyndon suffix starts at the first letter smaller than everything after it
    split = next(i for i in range(1, len(word)) if word[i] == min(word[i:]))
    return standard_bracketing(word[:split]), standard_bracketing(word[split:])


def check_arity(n: int) -> None:
    """Raise unless Lie(n) is within the configured arity limit"""
    require_positive(n, "n")
    if n > config.MAX_LIE_ARITY:
        raise CapacityError(f"Lie({n}) exceeds the configured arity limit {config.MAX_LIE_ARITY}")


@lru_cache(maxsize=16)
def _basis(n: int) -> Tuple[BracketTree, ...]:
    """Cached Lyndon basis without the arity check"""
    words = ((1,) + rest for rest in permutations(range(2, n + 1)))
    return tuple(standard_bracketing(word) for word in words)


def lyndon_basis(n: int) -> List[BracketTree]:
    """Standard bracketings of the (n-1)! multilinear Lyndon words, in word order"""
    check_arity(n)
    return list(_basis(n))


@lru_cache(maxsize=16)
def basis_index(n: int) -> Dict[BracketTree, int]:
    """Position of each basis bracketing"""
    return {tree: i for i, tree in enumerate(_basis(n))}


def validate_tree(tree: BracketTree, n: int) -> None:
    """Raise InvalidInputError unless tree is a bracketing using each of 1..n once"""
    if not _well_formed(tree):
        raise InvalidInputError(f"{tree!r} is not a bracket tree")
    leaves = foliage(tree)
    if sorted(leaves) != list(range(1, n + 1)):
        raise InvalidInputError(f"{format_tree(tree)} does not use each of 1..{n} exactly once")


def _well_formed(tree) -> bool:
    """Whether tree is an int or a nested pair of them"""
    if isinstance(tree, bool):
        return False
    if isinstance(tree, int):
        return True
    return isinstance(tree, tuple) and len(tree) == 2 and _well_formed(tree[0]) and _well_formed(tree[1])


def format_tree(tree: BracketTree) -> str:
    """Render a tree as [a,[b,c]]"""
    if isinstance(tree, int):
        return str(tree)
    return f"[{format_tree(tree[0])},{format_tree(tree[1])}]"


def _tree_grammar() -> pp.ParserElement:
    """pyparsing grammar for fully bracketed trees"""
    tree = pp.Forward()
    leaf = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
    bracket = pp.Suppress("[") + tree + pp.Suppress(",") + tree + pp.Suppress("]")
    bracket.set_parse_action(lambda t: [(t[0], t[1])])
    tree <<= bracket | leaf
    return tree


TREE_GRAMMAR = _tree_grammar()


def parse_tree(text: str) -> BracketTree:
    """Parse a fully bracketed tree such as "[1,[2,3]]" """
    try:
        return TREE_GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseException as e:
        raise InvalidInputError(f"cannot parse bracket tree {text!r}: {e}")


def _add(total: Dict[BracketTree, int], combination: Combination, scale: int) -> None:
    """total += scale * combination"""
    for tree, coeff in combination:
        total[tree] = total.get(tree, 0) + scale * coeff


def _collect(total: Dict[BracketTree, int]) -> Combination:
    """Nonzero terms as a hashable combination"""
    return tuple((tree, coeff) for tree, coeff in total.items() if coeff)


@lru_cache(maxsize=65536)
def _bracket_standard(left: BracketTree, right: BracketTree) -> Combination:
    """[left, right] for standard bracketings with disjoint letters, as integer Lyndon combination"""
    if foliage(left) > foliage(right):
        return tuple((tree, -coeff) for tree, coeff in _bracket_standard(right, left))
    if isinstance(left, int) or foliage(left[1]) > foliage(right):
        return (((left, right), 1),)
    # [[a, b], c] = [a, [b, c]] + [[a, c], b]
    first, second = left
    total: Dict[BracketTree, int] = {}
    for tree, coeff in _bracket_standard(second, right):
        _add(total, _bracket_standard(first, tree), coeff)
    for tree, coeff in _bracket_standard(first, right):
        _add(total, _bracket_standard(tree, second), coeff)
    return _collect(total)


@lru_cache(maxsize=4096)
def _straighten(tree: BracketTree) -> Combination:
    """Integer Lyndon combination equal to an arbitrary tree"""
    if isinstance(tree, int):
        return ((tree, 1),)
    total: Dict[BracketTree, int] = {}
    for a, ca in _straighten(tree[0]):
        for b, cb in _straighten(tree[1]):
            _add(total, _bracket_standard(a, b), ca * cb)
    return _collect(total)


@dataclass(frozen=True)
class LieElement:
    """A combination of Lyndon basis bracketings with nonzero coefficients mod p"""
    n: int
    p: int
    coeffs: Tuple[Tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        size = factorial(self.n - 1)
        cleaned = {}
        for index, coeff in dict(self.coeffs).items():
            if not 0 <= index < size:
                raise InvalidInputError(f"basis index {index} out of range for Lie({self.n})")
            if coeff % self.p:
                cleaned[index] = coeff % self.p
        object.__setattr__(self, 'coeffs', tuple(sorted(cleaned.items())))

    @classmethod
    def from_vector(cls, n: int, p: int, vector) -> 'LieElement':
        """Element with the given coefficient vector"""
        return cls(n, p, tuple((i, int(c)) for i, c in enumerate(vector) if int(c) % p))

    def to_vector(self) -> np.ndarray:
        """Dense coefficient vector of length (n-1)!"""
        vector = np.zeros(factorial(self.n - 1), dtype=np.int64)
        for index, coeff in self.coeffs:
            vector[index] = coeff
        return vector

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        basis = _basis(self.n)
        terms = [
            format_tree(basis[i]) if c == 1 else f"{c}*{format_tree(basis[i])}"
            for i, c in self.coeffs
        ]
        return " + ".join(terms)

    def to_dict(self) -> dict:
        """JSON-ready form listing each term with its tree"""
        basis = _basis(self.n)
        return {
            "n": self.n,
            "p": self.p,
            "terms": [{"index": i, "tree": format_tree(basis[i]), "coeff": c} for i, c in self.coeffs],
        }


def normal_form(tree: BracketTree, n: int, p: int) -> LieElement:
    """Expansion of a bracketing in the Lyndon basis of Lie(n) over F_p"""
    require_prime(p)
    check_arity(n)
    validate_tree(tree, n)
    index = basis_index(n)
    return LieElement(n, p, tuple((index[t], c) for t, c in _straighten(tree)))


def expand_associative(tree: BracketTree) -> Dict[Tuple[int, ...], int]:
    """Commutator expansion [a, b] = ab - ba into associative words"""
    if isinstance(tree, int):
        return {(tree,): 1}
    left, right = expand_associative(tree[0]), expand_associative(tree[1])
    total: Dict[Tuple[int, ...], int] = {}
    for u, cu in left.items():
        for v, cv in right.items():
            total[u + v] = total.get(u + v, 0) + cu * cv
            total[v + u] = total.get(v + u, 0) - cu * cv
    return total


@lru_cache(maxsize=16)
def _word_index(n: int) -> Dict[Tuple[int, ...], int]:
    """Position of each permutation word among the n! associative words"""
    return {word: i for i, word in enumerate(permutations(range(1, n + 1)))}


def _expansion_vector(tree: BracketTree, n: int, p: int) -> np.ndarray:
    """Associative expansion of a tree as a vector mod p"""
    index = _word_index(n)
    vector = np.zeros(len(index), dtype=np.int64)
    for word, coeff in expand_associative(tree).items():
        vector[index[word]] = coeff % p
    return vector


@lru_cache(maxsize=16)
def _expansion_matrix(n: int, p: int) -> np.ndarray:
    """Columns are the associative expansions of the Lyndon basis"""
    matrix = np.stack([_expansion_vector(tree, n, p) for tree in _basis(n)], axis=1)
    matrix.setflags(write=False)
    return matrix


def _format_terms(terms: Sequence[Tuple[BracketTree, int]]) -> str:
    """Render a formal combination such as 2*[1,2] + [2,1]"""
    return " + ".join(format_tree(tree) if coeff == 1 else f"{coeff}*{format_tree(tree)}" for tree, coeff in terms)


def combination_normal_form(terms: Sequence[Tuple[BracketTree, int]], n: int, p: int) -> LieElement:
    """Normal form of a formal sum of bracketings, extended linearly from normal_form"""
    require_prime(p)
    check_arity(n)
    total = np.zeros(factorial(n - 1), dtype=np.int64)
    for tree, coeff in terms:
        total = (total + coeff * normal_form(tree, n, p).to_vector()) % p
    return LieElement.from_vector(n, p, total)


def combination_by_expansion(terms: Sequence[Tuple[BracketTree, int]], n: int, p: int) -> LieElement:
    """Lyndon coefficients of a formal sum, solved from its summed associative expansion"""
    require_prime(p)
    check_arity(n)
    vector = np.zeros(factorial(n), dtype=np.int64)
    for tree, coeff in terms:
        validate_tree(tree, n)
        vector = (vector + coeff * _expansion_vector(tree, n, p)) % p
    solution = fp_linalg.solve(_expansion_matrix(n, p), vector, p)
    if solution is None:
        raise OracleError(f"{_format_terms(terms)} is not in the span of the Lyndon basis mod {p}")
    return LieElement.from_vector(n, p, solution)


def normal_form_by_expansion(tree: BracketTree, n: int, p: int) -> LieElement:
    """Lyndon coefficients found by solving in the n!-dimensional associative span"""
    return combination_by_expansion(((tree, 1),), n, p)


def relabel(tree: BracketTree, images: Sequence[int]) -> BracketTree:
    """Apply sigma to every leaf; images[i - 1] = sigma(i)"""
    if isinstance(tree, int):
        return images[tree - 1]
    return relabel(tree[0], images), relabel(tree[1], images)


def random_tree(n: int, rng: random.Random) -> BracketTree:
    """A uniformly shuffled bracketing of 1..n with random split points"""
    letters = list(range(1, n + 1))
    rng.shuffle(letters)

    def build(items: List[int]) -> BracketTree:
        if len(items) == 1:
            return items[0]
        split = rng.randint(1, len(items) - 1)
        return build(items[:split]), build(items[split:])

    return build(letters)
