"""Free resolutions of the trivial module over kSigma_lambda by iterated kernels

P_n = (kG)^{ranks[n]}. differentials[n-1] has shape (ranks[n], ranks[n-1], |G|):
the basis vector e_i of P_n maps to sum_j D[i, j] e_j, each D[i, j] an element of
kG. P_0 = kG maps onto k by the augmentation.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from liecx.config import DEFAULT_LIMITS, Limits
from liecx.errors import CapacityError, InvalidInputError, OracleError
from liecx.oracle import fp_linalg
from liecx.oracle.radical import jacobson_radical
from liecx.oracle.young_group import YoungGroup, act_on_free, left_regular, young_group
from liecx.validators.input_validator import require_nonnegative, require_prime

STRATEGIES = ("minimal", "scan")

# Random elements of K tried per generator before settling for the widest
CANDIDATES = 64
GENERATOR_SEED = 20240601


@dataclass(frozen=True, eq=False)
class Resolution:
    """Ranks and differentials of P_length -> ... -> P_0 -> k"""
    p: int
    composition: Tuple[int, ...]
    ranks: Tuple[int, ...]
    differentials: Tuple[np.ndarray, ...] = field(default=())
    strategy: str = "minimal"
    semisimple: bool = False

    @property
    def length(self) -> int:
        """Number of differentials"""
        return len(self.ranks) - 1

    def to_dict(self) -> dict:
        """JSON-ready form with differentials as nested lists"""
        return {
            "p": self.p,
            "lambda": list(self.composition),
            "strategy": self.strategy,
            "semisimple": self.semisimple,
            "ranks": list(self.ranks),
            "differentials": [d.tolist() for d in self.differentials],
        }


def augmentation_kernel(group: YoungGroup, p: int) -> np.ndarray:
    """Basis e_g - e_1 (g != 1) of the augmentation ideal"""
    order = group.order
    basis = np.eye(order, dtype=np.int64)[1:]
    basis[:, 0] = p - 1
    return basis


def _right_translates(group: YoungGroup, element: np.ndarray) -> np.ndarray:
    """x*g for every group element g, as rows"""
    translates = np.zeros((group.order, group.order), dtype=np.int64)
    for g in range(group.order):
        translates[g, group.mult[:, g]] = element
    return translates


def radical_generators(group: YoungGroup, radical: np.ndarray, p: int) -> np.ndarray:
    """Elements j_1, ..., j_t of J with J = j_1 kG + ... + j_t kG"""
    span = fp_linalg.Subspace(group.order, p)
    chosen = []
    for element in radical:
        if element in span:
            continue
        chosen.append(element)
        span.extend(_right_translates(group, element))
        if span.dim == radical.shape[0]:
            break
    return np.array(chosen, dtype=np.int64).reshape(len(chosen), group.order)


def _radical_times(group: YoungGroup, generators: np.ndarray, kernel: np.ndarray, rank: int, p: int) -> np.ndarray:
    """Spanning rows of J*K = j_1 K + ... + j_t K for K given by rows in (kG)^rank"""
    if generators.shape[0] == 0 or kernel.shape[0] == 0:
        return np.zeros((0, kernel.shape[1]), dtype=np.int64)
    blocks = kernel.reshape(kernel.shape[0], rank, group.order)
    pieces = []
    for element in generators:
        left = left_regular(group, element, p)
        pieces.append(np.einsum('gh,kah->kag', left, blocks).reshape(kernel.shape[0], -1) % p)
    return np.vstack(pieces)


def _translates(group: YoungGroup, vector: np.ndarray, rank: int) -> np.ndarray:
    """g*v for every group element, as rows"""
    blocks = vector.reshape(rank, group.order)
    return np.stack([act_on_free(group, g, blocks).ravel() for g in range(group.order)])


def _scan(group: YoungGroup, covered: fp_linalg.Subspace, kernel: np.ndarray, rank: int) -> List[np.ndarray]:
    """Kernel rows in order, skipping those already covered"""
    chosen = []
    for vector in kernel:
        if covered.dim == kernel.shape[0]:
            break
        if vector in covered:
            continue
        chosen.append(vector)
        covered.extend(_translates(group, vector, rank))
    return chosen


def _widest(group: YoungGroup, covered: fp_linalg.Subspace, kernel: np.ndarray, rank: int, p: int, top: int,
            rng: np.random.Generator) -> List[np.ndarray]:
    """Random elements of K, each generating the largest cyclic piece of what is still uncovered"""
    chosen = []
    target = kernel.shape[0]
    while covered.dim < target:
        ceiling = min(top, target - covered.dim)
        best, best_translates, best_gain = None, None, 0
        for _ in range(CANDIDATES):
            candidate = fp_linalg.matmul(rng.integers(0, p, size=target), kernel, p)
            translates = _translates(group, candidate, rank)
            gain = covered.gain(translates)
            if gain > best_gain:
                best, best_translates, best_gain = candidate, translates, gain
            if best_gain == ceiling:
                break
        if best is None:
            chosen.extend(_scan(group, covered, kernel, rank))
            break
        chosen.append(best)
        covered.extend(best_translates)
    return chosen


def _choose_generators(group: YoungGroup, ideal: np.ndarray, top: int, kernel: np.ndarray, rank: int, p: int,
                       strategy: str, rng: np.random.Generator) -> np.ndarray:
    """kG-generators of the submodule K of (kG)^rank spanned by the rows of kernel

    Both strategies work modulo J*K, which by Nakayama is enough to generate K.
    "minimal" takes a generic element each time. Its cyclic submodule covers
    min(m_S, dim S) copies of every simple S still missing from K/J*K, so the
    count reached is the minimal max_S ceil(m_S / dim S). "scan" walks the kernel
    basis and keeps whatever is not yet covered.
    """
    width = kernel.shape[1]
    if kernel.shape[0] == 0:
        return np.zeros((0, width), dtype=np.int64)
    covered = fp_linalg.Subspace(width, p, _radical_times(group, ideal, kernel, rank, p))
    if strategy == "minimal":
        chosen = _widest(group, covered, kernel, rank, p, top, rng)
    else:
        chosen = _scan(group, covered, kernel, rank)
    return np.array(chosen, dtype=np.int64).reshape(len(chosen), width)


def _linear_map(group: YoungGroup, differential: np.ndarray) -> np.ndarray:
    """F_p matrix of P_n -> P_{n-1}; column i*|G| + h holds h*d(e_i)"""
    rank_in = differential.shape[0]
    columns = np.stack([act_on_free(group, h, differential) for h in range(group.order)], axis=1)
    return columns.reshape(rank_in * group.order, -1).T


def _build(composition: Tuple[int, ...], p: int, length: int, strategy: str, limits: Limits) -> Resolution:
    """Kernel-by-kernel construction, raising CapacityError past the width limit"""
    group = young_group(composition, limits)
    if group.order % p:
        return Resolution(
            p, group.composition, (1,) + (0,) * length,
            tuple(np.zeros((0, 1 if n == 0 else 0, group.order), dtype=np.int64) for n in range(length)),
            strategy, semisimple=True,
        )
    radical = jacobson_radical(composition, p, limits)
    ideal = radical_generators(group, radical, p)
    top = group.order - radical.shape[0]
    rng = np.random.default_rng(GENERATOR_SEED)
    ranks = [1]
    differentials: List[np.ndarray] = []
    kernel = augmentation_kernel(group, p)
    for _ in range(length):
        rank = ranks[-1]
        generators = _choose_generators(group, ideal, top, kernel, rank, p, strategy, rng)
        count = generators.shape[0]
        if count * group.order > limits.width:
            partial = Resolution(p, group.composition, tuple(ranks), tuple(differentials), strategy)
            raise CapacityError(
                f"resolution of Sigma_{group.composition} needs rank {count} in degree {len(ranks)}, "
                f"beyond the width limit {limits.width}",
                partial=partial,
            )
        differential = generators.reshape(count, rank, group.order)
        differential.setflags(write=False)
        differentials.append(differential)
        ranks.append(count)
        if count:
            kernel = fp_linalg.nullspace(_linear_map(group, differential), p)
        else:
            kernel = np.zeros((0, 0), dtype=np.int64)
    return Resolution(p, group.composition, tuple(ranks), tuple(differentials), strategy)


@lru_cache(maxsize=64)
def _cached(composition: Tuple[int, ...], p: int, length: int, strategy: str, limits: Limits) -> Resolution:
    """Memoised resolutions keyed by normalised arguments"""
    return _build(composition, p, length, strategy, limits)


def resolution(composition: Sequence[int], p: int, length: int, strategy: str = "minimal",
               limits: Limits = DEFAULT_LIMITS) -> Resolution:
    """Free resolution of k over kSigma_lambda through degree `length`"""
    require_prime(p)
    require_nonnegative(length, "length")
    if strategy not in STRATEGIES:
        raise InvalidInputError(f"unknown resolution strategy {strategy!r}, expected one of {STRATEGIES}")
    group = young_group(composition, limits)
    return _cached(group.composition, p, length, strategy, limits)


def composite(group: YoungGroup, upper: np.ndarray, lower: np.ndarray, p: int) -> np.ndarray:
    """Coefficients of d_{n-1} o d_n, shape (ranks[n], ranks[n-2], |G|)"""
    result = np.zeros((upper.shape[0], lower.shape[1], group.order), dtype=np.int64)
    for i in range(upper.shape[0]):
        for j in range(upper.shape[1]):
            if not np.any(upper[i, j]):
                continue
            left = left_regular(group, upper[i, j], p)
            result[i] = (result[i] + (left @ lower[j].T).T) % p
    return result


def verify_resolution(res: Resolution, limits: Limits = DEFAULT_LIMITS) -> None:
    """Raise OracleError unless the augmentation and every d o d vanish"""
    if res.semisimple:
        return
    group = young_group(res.composition, limits)
    p = res.p
    if res.differentials:
        first = res.differentials[0]
        if np.any(first.sum(axis=2) % p):
            raise OracleError("augmentation does not vanish on the image of d_1")
    for n in range(1, len(res.differentials)):
        if np.any(composite(group, res.differentials[n], res.differentials[n - 1], p)):
            raise OracleError(f"d_{n} o d_{n + 1} is not zero")

