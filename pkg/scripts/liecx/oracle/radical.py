"""Group algebras of Young subgroups and their Jacobson radicals

The radical of a single block algebra kSigma_m is found with the p-power trace
criterion on the integral regular representation: starting from I = A,

    I_i = {a in I_{i-1} : g_i(a b) = 0 for every group element b}
    g_i(x) = (Tr(L_x^{p^i}) mod p^{i+1}) / p^i

and J = I_l for l = floor(log_p dim A). A Young subgroup algebra is the tensor
product of its block algebras, so J(kSigma_lambda) is the sum of
J(kSigma_{lambda_i}) tensored with the remaining blocks.
"""
from functools import lru_cache
from math import factorial, prod
from typing import List, Sequence, Tuple

import numpy as np

from liecx.config import DEFAULT_LIMITS, Limits
from liecx.errors import OracleError
from liecx.oracle import fp_linalg
from liecx.oracle.group_module import GModuleRep
from liecx.oracle.young_group import YoungGroup, left_regular, young_group
from liecx.validators.input_validator import require_prime


def group_algebra(composition: Sequence[int], p: int, limits: Limits = DEFAULT_LIMITS) -> GModuleRep:
    """The regular representation of kSigma_lambda"""
    require_prime(p)
    group = young_group(composition, limits)
    order = group.order
    columns = np.arange(order)
    gens = []
    for s in group.generator_indices():
        matrix = np.zeros((order, order), dtype=np.int64)
        matrix[group.mult[s], columns] = 1
        gens.append(matrix)
    return GModuleRep(p, group.composition, order, tuple(gens))


def _log_floor(value: int, p: int) -> int:
    """Largest e with p^e <= value"""
    exponent = 0
    while p ** (exponent + 1) <= value:
        exponent += 1
    return exponent


def _ring_product(group: YoungGroup, x: np.ndarray, y: np.ndarray, modulus: int) -> np.ndarray:
    """x*y in (Z/modulus)[G] via the multiplication table"""
    weights = np.outer(x, y).ravel().astype(np.float64)
    product = np.bincount(group.mult.ravel(), weights=weights, minlength=group.order)
    return np.rint(product).astype(np.int64) % modulus


def _ring_power(group: YoungGroup, x: np.ndarray, exponent: int, modulus: int) -> np.ndarray:
    """x**exponent in Z/modulus[G] by repeated squaring"""
    result = np.zeros(group.order, dtype=np.int64)
    result[0] = 1
    base = x % modulus
    while exponent:
        if exponent & 1:
            result = _ring_product(group, result, base, modulus)
        base = _ring_product(group, base, base, modulus)
        exponent >>= 1
    return result


def _trace_functional(group: YoungGroup, x: np.ndarray, i: int, p: int) -> int:
    """g_i(x); the regular trace of y is |G| times the identity coefficient of y"""
    modulus = p ** (i + 1)
    identity_coefficient = int(_ring_power(group, x, p ** i, modulus)[0])
    trace = (group.order * identity_coefficient) % modulus
    if trace % (p ** i):
        raise OracleError(f"trace {trace} of a {p}^{i}-th power is not divisible by {p ** i}")
    return trace // (p ** i)


def _block_radical(group: YoungGroup, p: int) -> np.ndarray:
    """Radical basis of kG for one symmetric group, by iterated trace kernels"""
    order = group.order
    if order % p:
        return np.zeros((0, order), dtype=np.int64)
    ideal = np.eye(order, dtype=np.int64)
    # g_0 is |G| times a coordinate, which vanishes once p divides |G|
    for i in range(1, _log_floor(order, p) + 1):
        pairing = np.zeros((order, ideal.shape[0]), dtype=np.int64)
        for k, vector in enumerate(ideal):
            for b in range(order):
                translate = np.zeros(order, dtype=np.int64)
                # entries already lie in [0, p), so this is an integral lift of vector * b
                translate[group.mult[:, b]] = vector
                pairing[b, k] = _trace_functional(group, translate, i, p)
        kernel = fp_linalg.nullspace(pairing % p, p)
        if kernel.shape[0] == 0:
            return np.zeros((0, order), dtype=np.int64)
        reduced, pivots = fp_linalg.row_reduce(fp_linalg.matmul(kernel, ideal, p), p)
        ideal = reduced[:len(pivots)]
    return ideal


def _tensor_rows(sizes: List[int], position: int, rows: np.ndarray) -> np.ndarray:
    """rows in factor `position` tensored with every basis element of the other factors"""
    pieces = []
    for row in rows:
        factors = [np.eye(size, dtype=np.int64) for size in sizes]
        factors[position] = row.reshape(1, -1)
        product = factors[0]
        for factor in factors[1:]:
            product = np.kron(product, factor)
        pieces.append(product)
    if not pieces:
        return np.zeros((0, prod(sizes)), dtype=np.int64)
    return np.vstack(pieces)


@lru_cache(maxsize=32)
def _radical(composition: Tuple[int, ...], p: int) -> np.ndarray:
    """Cached radical basis for a normalised composition"""
    sizes = []
    rows = []
    for size in composition:
        block_group = young_group((size,), Limits(group_order=factorial(size)))
        sizes.append(block_group.order)
        rows.append(_block_radical(block_group, p))
    order = prod(sizes)
    pieces = [_tensor_rows(sizes, i, block_rows) for i, block_rows in enumerate(rows) if block_rows.shape[0]]
    if not pieces:
        basis = np.zeros((0, order), dtype=np.int64)
    else:
        reduced, pivots = fp_linalg.row_reduce(np.vstack(pieces), p)
        basis = reduced[:len(pivots)]
    basis.setflags(write=False)
    return basis


def jacobson_radical(composition: Sequence[int], p: int, limits: Limits = DEFAULT_LIMITS) -> np.ndarray:
    """Basis (rows, reduced echelon form) of J(kSigma_lambda) inside the regular representation"""
    require_prime(p)
    group = young_group(composition, limits)
    return _radical(group.composition, p)


def ideal_product(group: YoungGroup, first: np.ndarray, second: np.ndarray, p: int) -> np.ndarray:
    """Echelon basis of the span of all products x*y, x in first, y in second"""
    products = [fp_linalg.matmul(left_regular(group, x, p), second.T, p).T for x in first]
    if not products:
        return np.zeros((0, group.order), dtype=np.int64)
    reduced, pivots = fp_linalg.row_reduce(np.vstack(products), p)
    return reduced[:len(pivots)]


def nilpotency_index(composition: Sequence[int], p: int, limits: Limits = DEFAULT_LIMITS) -> int:
    """Smallest k with J^k = 0; raises OracleError if the powers stall before vanishing"""
    group = young_group(composition, limits)
    radical = jacobson_radical(composition, p, limits)
    power = radical
    k = 1
    while power.shape[0]:
        following = ideal_product(group, power, radical, p)
        if following.shape[0] == power.shape[0]:
            raise OracleError(f"J^{k} = J^{k + 1} != 0 for Sigma_{group.composition} at p = {p}")
        power = following
        k += 1
    return k
