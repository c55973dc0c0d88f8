"""Modules over Young subgroup group algebras, given by Coxeter generator matrices"""
import random
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from liecx.config import DEFAULT_LIMITS, Limits
from liecx.errors import InvalidInputError
from liecx.oracle import fp_linalg
from liecx.oracle.young_group import YoungGroup, coxeter_positions, young_group
from liecx.validators.input_validator import require_composition, require_prime


@dataclass(frozen=True, eq=False)
class GModuleRep:
    """A kSigma_lambda-module: one matrix per Coxeter generator, in block order"""
    p: int
    composition: Tuple[int, ...]
    dim: int
    gens: Tuple[np.ndarray, ...] = field(default=())

    def __post_init__(self):
        require_prime(self.p)
        composition = require_composition(self.composition)
        gens = tuple(np.array(g, dtype=np.int64).reshape(self.dim, self.dim) % self.p for g in self.gens)
        for g in gens:
            g.setflags(write=False)
        object.__setattr__(self, 'composition', composition)
        object.__setattr__(self, 'gens', gens)
        self._check_relations()

    def _check_relations(self) -> None:
        """Raise unless the generators satisfy the Coxeter relations"""
        positions = coxeter_positions(self.composition)
        if len(positions) != len(self.gens):
            raise InvalidInputError(
                f"Sigma_{self.composition} has {len(positions)} Coxeter generators, got {len(self.gens)} matrices"
            )
        identity = np.eye(self.dim, dtype=np.int64)
        p = self.p
        for i, (a, g) in enumerate(zip(positions, self.gens)):
            if fp_linalg.rank(g, p) != self.dim:
                raise InvalidInputError(f"generator ({a + 1} {a + 2}) is not invertible")
            if not np.array_equal(fp_linalg.matmul(g, g, p), identity):
                raise InvalidInputError(f"generator ({a + 1} {a + 2}) does not square to 1")
            for b, h in zip(positions[i + 1:], self.gens[i + 1:]):
                gh = fp_linalg.matmul(g, h, p)
                order = 3 if abs(a - b) == 1 else 2
                if not np.array_equal(fp_linalg.matrix_power(gh, order, p), identity):
                    raise InvalidInputError(
                        f"generators ({a + 1} {a + 2}) and ({b + 1} {b + 2}) violate the Coxeter relations"
                    )

    def to_dict(self) -> dict:
        """JSON-ready form with generator matrices as lists"""
        return {
            "p": self.p,
            "lambda": list(self.composition),
            "dim": self.dim,
            "gens": [g.tolist() for g in self.gens],
        }


def _generator_count(composition: Sequence[int]) -> int:
    """Number of Coxeter generators of Sigma_lambda"""
    return len(coxeter_positions(composition))


def trivial_module(composition: Sequence[int], p: int) -> GModuleRep:
    """k with every generator acting as 1"""
    count = _generator_count(require_composition(composition))
    return GModuleRep(p, tuple(composition), 1, tuple(np.ones((1, 1), dtype=np.int64) for _ in range(count)))


def sign_module(composition: Sequence[int], p: int) -> GModuleRep:
    """k with every generator acting as -1"""
    count = _generator_count(require_composition(composition))
    return GModuleRep(p, tuple(composition), 1, tuple(np.full((1, 1), p - 1, dtype=np.int64) for _ in range(count)))


def permutation_module(composition: Sequence[int], p: int) -> GModuleRep:
    """Sigma_lambda permuting the n points"""
    composition = require_composition(composition)
    n = sum(composition)
    gens = []
    for i in coxeter_positions(composition):
        matrix = np.eye(n, dtype=np.int64)
        matrix[[i, i + 1]] = matrix[[i + 1, i]]
        gens.append(matrix)
    return GModuleRep(p, composition, n, tuple(gens))


def direct_sum(first: GModuleRep, second: GModuleRep) -> GModuleRep:
    """Block diagonal sum of two modules over the same group"""
    if first.p != second.p or first.composition != second.composition:
        raise InvalidInputError("direct summands must share p and the composition")
    dim = first.dim + second.dim
    gens = []
    for a, b in zip(first.gens, second.gens):
        matrix = np.zeros((dim, dim), dtype=np.int64)
        matrix[:first.dim, :first.dim] = a
        matrix[first.dim:, first.dim:] = b
        gens.append(matrix)
    if not first.gens:
        gens = []
    return GModuleRep(first.p, first.composition, dim, tuple(gens))


def conjugate(module: GModuleRep, change: np.ndarray) -> GModuleRep:
    """The isomorphic module X g X^-1"""
    p = module.p
    change_inverse = fp_linalg.inverse(change, p)
    gens = tuple(fp_linalg.matmul(fp_linalg.matmul(change, g, p), change_inverse, p) for g in module.gens)
    return GModuleRep(p, module.composition, module.dim, gens)


def dual_module(module: GModuleRep) -> GModuleRep:
    """M* = Hom(M, k): generators act by inverse transposes"""
    gens = tuple(fp_linalg.inverse(g, module.p).T for g in module.gens)
    return GModuleRep(module.p, module.composition, module.dim, gens)


def random_invertible(dim: int, p: int, rng: random.Random) -> np.ndarray:
    """Uniformly random element of GL(dim, F_p)"""
    while True:
        matrix = np.array([[rng.randrange(p) for _ in range(dim)] for _ in range(dim)], dtype=np.int64)
        if fp_linalg.rank(matrix, p) == dim:
            return matrix


def random_module(composition: Sequence[int], p: int, max_dim: int, rng: random.Random) -> GModuleRep:
    """A random direct sum of trivial, sign and permutation modules, disguised by a change of basis"""
    composition = require_composition(composition)
    builders = [trivial_module, sign_module]
    if sum(composition) <= max_dim:
        builders.append(permutation_module)
    module = rng.choice(builders)(composition, p)
    while True:
        options = [b for b in builders if module.dim + _sample_dim(b, composition) <= max_dim]
        if not options or rng.random() < 0.3:
            break
        module = direct_sum(module, rng.choice(options)(composition, p))
    return conjugate(module, random_invertible(module.dim, p, rng))


def _sample_dim(builder, composition: Sequence[int]) -> int:
    """Dimension a builder produces for this composition"""
    return sum(composition) if builder is permutation_module else 1


def element_matrices(module: GModuleRep, group: YoungGroup = None, limits: Limits = DEFAULT_LIMITS) -> np.ndarray:
    """rho(g) for every group element, shape (|G|, dim, dim), built outward from the generators"""
    if group is None:
        group = young_group(module.composition, limits)
    p = module.p
    matrices = np.zeros((group.order, module.dim, module.dim), dtype=np.int64)
    matrices[0] = np.eye(module.dim, dtype=np.int64)
    seen = [False] * group.order
    seen[0] = True
    queue = [0]
    generator_indices = group.generator_indices()
    while queue:
        h = queue.pop(0)
        for s, matrix in zip(generator_indices, module.gens):
            g = int(group.mult[s, h])
            if not seen[g]:
                seen[g] = True
                matrices[g] = fp_linalg.matmul(matrix, matrices[h], p)
                queue.append(g)
    return matrices


def algebra_action(matrices: np.ndarray, element, p: int) -> np.ndarray:
    """rho(x) for a group algebra element x = sum_g x_g g"""
    return np.tensordot(np.asarray(element, dtype=np.int64) % p, matrices, axes=1) % p


def _stacked_differences(module: GModuleRep) -> List[np.ndarray]:
    """Matrices g - 1 for the generators g"""
    identity = np.eye(module.dim, dtype=np.int64)
    return [(g - identity) % module.p for g in module.gens]


def coinvariants_dim(module: GModuleRep) -> int:
    """dim M / span{g v - v}"""
    differences = _stacked_differences(module)
    if not differences or module.dim == 0:
        return module.dim
    return module.dim - fp_linalg.rank(np.hstack(differences), module.p)


def invariants_dim(module: GModuleRep) -> int:
    """dim {v : g v = v for all g}"""
    differences = _stacked_differences(module)
    if not differences or module.dim == 0:
        return module.dim
    return module.dim - fp_linalg.rank(np.vstack(differences), module.p)
