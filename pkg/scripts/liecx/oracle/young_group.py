"""Young subgroups Sigma_lambda of Sigma_n as explicit permutation groups

Permutations are 0-based image tuples; (a * b)(i) = a(b(i)). Elements are
listed block by block in lexicographic order, so the identity comes first.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Dict, List, Sequence, Tuple

import numpy as np

from liecx.config import DEFAULT_LIMITS, Limits
from liecx.errors import CapacityError
from liecx.validators.input_validator import require_composition

Perm = Tuple[int, ...]


def compose(a: Perm, b: Perm) -> Perm:
    """Product a * b, applying b first"""
    return tuple(a[i] for i in b)


def invert(a: Perm) -> Perm:
    """Inverse permutation"""
    result = [0] * len(a)
    for i, image in enumerate(a):
        result[image] = i
    return tuple(result)


def transposition(n: int, i: int) -> Perm:
    """The 0-based transposition swapping i and i+1"""
    images = list(range(n))
    images[i], images[i + 1] = images[i + 1], images[i]
    return tuple(images)


def coxeter_positions(composition: Sequence[int]) -> List[int]:
    """Positions i of the generators (i, i+1) internal to each block, 0-based"""
    positions = []
    start = 0
    for size in composition:
        positions.extend(range(start, start + size - 1))
        start += size
    return positions


def group_order(composition: Sequence[int]) -> int:
    """|Sigma_lambda| as a product of factorials"""
    return prod(factorial(size) for size in composition)


@dataclass(frozen=True, eq=False)
class YoungGroup:
    composition: Tuple[int, ...]
    elements: Tuple[Perm, ...]
    index: Dict[Perm, int]
    generators: Tuple[Perm, ...]
    positions: Tuple[int, ...]
    mult: np.ndarray
    inverse: np.ndarray

    @property
    def order(self) -> int:
        """Number of elements"""
        return len(self.elements)

    @property
    def degree(self) -> int:
        """n, the number of points permuted"""
        return sum(self.composition)

    def generator_indices(self) -> List[int]:
        """Element indices of the Coxeter generators"""
        return [self.index[g] for g in self.generators]


@lru_cache(maxsize=32)
def _build_group(composition: Tuple[int, ...]) -> YoungGroup:
    """Elements, multiplication table and inverses for a normalised composition"""
    n = sum(composition)
    blocks = []
    start = 0
    for size in composition:
        blocks.append(list(range(start, start + size)))
        start += size

    elements = []
    for choice in product(*(permutations(block) for block in blocks)):
        images = [0] * n
        for block, images_of_block in zip(blocks, choice):
            for point, image in zip(block, images_of_block):
                images[point] = image
        elements.append(tuple(images))
    index = {element: i for i, element in enumerate(elements)}

    order = len(elements)
    mult = np.empty((order, order), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            mult[i, j] = index[compose(a, b)]
    inverse = np.array([index[invert(a)] for a in elements], dtype=np.int64)
    mult.setflags(write=False)
    inverse.setflags(write=False)

    positions = tuple(coxeter_positions(composition))
    generators = tuple(transposition(n, i) for i in positions)
    return YoungGroup(composition, tuple(elements), index, generators, positions, mult, inverse)


def young_group(composition: Sequence[int], limits: Limits = DEFAULT_LIMITS) -> YoungGroup:
    """The Young subgroup for a composition, within the configured order limit"""
    composition = require_composition(composition)
    order = group_order(composition)
    if order > limits.group_order:
        raise CapacityError(
            f"|Sigma_{composition}| = {order} exceeds the group order limit {limits.group_order}"
        )
    return _build_group(composition)


def left_regular(group: YoungGroup, element, p: int) -> np.ndarray:
    """Matrix of left multiplication by a group algebra element on kG"""
    element = np.asarray(element, dtype=np.int64) % p
    order = group.order
    matrix = np.zeros((order, order), dtype=np.int64)
    columns = np.arange(order)
    for g in np.flatnonzero(element):
        matrix[group.mult[g], columns] += element[g]
    return matrix % p


def algebra_product(group: YoungGroup, x, y, p: int) -> np.ndarray:
    """Product x*y in the group algebra F_p[G]"""
    return left_regular(group, x, p) @ (np.asarray(y, dtype=np.int64) % p) % p


def act_on_free(group: YoungGroup, g: int, vectors: np.ndarray) -> np.ndarray:
    """Left action of the group element g on vectors of kG^a, shape (..., a, |G|)"""
    result = np.zeros_like(vectors)
    result[..., group.mult[g]] = vectors
    return result
