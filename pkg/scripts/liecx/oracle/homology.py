"""Group homology and cohomology of Young subgroups with coefficients in a module

Tor_m(k, M) is the homology of P_m (x)_{kG} M = M^{ranks[m]}, where e_i (x) v
goes to sum_j e_j (x) S(D[i, j]) v and S is the antipode g -> g^-1.
Ext^m(k, M) is the cohomology of Hom(P_m, M) = M^{ranks[m]}.
"""
from itertools import product
from typing import List, Sequence

import numpy as np

from liecx.config import DEFAULT_LIMITS, Limits
from liecx.errors import CapacityError, InvalidInputError, OracleError
from liecx.oracle import fp_linalg
from liecx.oracle.group_module import (
    GModuleRep,
    algebra_action,
    coinvariants_dim,
    dual_module,
    element_matrices,
    invariants_dim,
)
from liecx.oracle.resolution_builder import resolution
from liecx.oracle.young_group import young_group
from liecx.validators.input_validator import require_composition, require_nonnegative, require_prime
from liecx.words.dim_series import DimSeries


def _check_module(composition: Sequence[int], p: int, module: GModuleRep) -> tuple:
    """Normalised composition after checking the module matches it"""
    require_prime(p)
    composition = require_composition(composition)
    if module.p != p:
        raise InvalidInputError(f"module is defined over F_{module.p}, not F_{p}")
    if module.composition != composition:
        raise InvalidInputError(
            f"module is a Sigma_{module.composition}-module, not a Sigma_{composition}-module"
        )
    return composition


def _label(kind: str, composition: Sequence[int], module: GModuleRep) -> str:
    """Series label such as "tor lambda=(2,2) dim=6" """
    parts = ",".join(str(part) for part in composition)
    return f"{kind} lambda=({parts}) dim={module.dim}"


def _block_matrix(blocks: np.ndarray, rows: int, cols: int, dim: int) -> np.ndarray:
    """Assemble blocks[row, col] (each dim x dim) into one matrix"""
    return blocks.transpose(0, 2, 1, 3).reshape(rows * dim, cols * dim)


def _tor_boundary(differential: np.ndarray, inverse_matrices: np.ndarray, p: int, dim: int) -> np.ndarray:
    """The map M^{ranks[n]} -> M^{ranks[n-1]} induced by one differential"""
    rank_in, rank_out, _ = differential.shape
    blocks = np.zeros((rank_out, rank_in, dim, dim), dtype=np.int64)
    for i in range(rank_in):
        for j in range(rank_out):
            blocks[j, i] = algebra_action(inverse_matrices, differential[i, j], p)
    return _block_matrix(blocks, rank_out, rank_in, dim)


def _ext_coboundary(differential: np.ndarray, matrices: np.ndarray, p: int, dim: int) -> np.ndarray:
    """The map M^{ranks[n-1]} -> M^{ranks[n]} induced by one differential"""
    rank_in, rank_out, _ = differential.shape
    blocks = np.zeros((rank_in, rank_out, dim, dim), dtype=np.int64)
    for i in range(rank_in):
        for j in range(rank_out):
            blocks[i, j] = algebra_action(matrices, differential[i, j], p)
    return _block_matrix(blocks, rank_in, rank_out, dim)


def _ranks_of(maps: List[np.ndarray], p: int) -> List[int]:
    """Rank of each boundary matrix mod p"""
    return [fp_linalg.rank(matrix, p) if matrix.size else 0 for matrix in maps]


def tor_dims(composition: Sequence[int], p: int, module: GModuleRep, m_max: int, strategy: str = "minimal",
             limits: Limits = DEFAULT_LIMITS) -> DimSeries:
    """dim H_m(Sigma_lambda, M) for 0 <= m <= m_max"""
    composition = _check_module(composition, p, module)
    require_nonnegative(m_max, "m_max")
    label = _label("tor", composition, module)
    coinvariants = coinvariants_dim(module)
    res = resolution(composition, p, m_max + 1, strategy, limits)
    if res.semisimple:
        return DimSeries(p, label, (coinvariants,) + (0,) * m_max)

    group = young_group(composition, limits)
    matrices = element_matrices(module, group, limits)
    inverse_matrices = matrices[group.inverse]
    boundaries = [_tor_boundary(d, inverse_matrices, p, module.dim) for d in res.differentials]
    ranks = [0] + _ranks_of(boundaries, p)
    dims = [res.ranks[m] * module.dim - ranks[m] - ranks[m + 1] for m in range(m_max + 1)]
    if dims[0] != coinvariants:
        raise OracleError(f"degree 0 of the complex has dimension {dims[0]}, coinvariants have {coinvariants}")
    return DimSeries(p, label, tuple(dims))


def ext_dims(composition: Sequence[int], p: int, module: GModuleRep, m_max: int, strategy: str = "minimal",
             limits: Limits = DEFAULT_LIMITS) -> DimSeries:
    """dim H^m(Sigma_lambda, M) from Hom(P_m, M), for 0 <= m <= m_max"""
    composition = _check_module(composition, p, module)
    require_nonnegative(m_max, "m_max")
    label = _label("ext", composition, module)
    invariants = invariants_dim(module)
    res = resolution(composition, p, m_max + 1, strategy, limits)
    if res.semisimple:
        return DimSeries(p, label, (invariants,) + (0,) * m_max)

    group = young_group(composition, limits)
    matrices = element_matrices(module, group, limits)
    coboundaries = [_ext_coboundary(d, matrices, p, module.dim) for d in res.differentials]
    ranks = [0] + _ranks_of(coboundaries, p)
    dims = [res.ranks[m] * module.dim - ranks[m + 1] - ranks[m] for m in range(m_max + 1)]
    if dims[0] != invariants:
        raise OracleError(f"degree 0 of the cochain complex has dimension {dims[0]}, invariants have {invariants}")
    return DimSeries(p, label, tuple(dims))


def cohomology_dims(composition: Sequence[int], p: int, module: GModuleRep, m_max: int,
                    limits: Limits = DEFAULT_LIMITS) -> DimSeries:
    """dim H^m(Sigma_lambda, M), computed as dim H_m(Sigma_lambda, M*)"""
    _check_module(composition, p, module)
    series = tor_dims(composition, p, dual_module(module), m_max, limits=limits)
    return DimSeries(p, _label("cohomology", composition, module), series.dims)


def _bar_boundary(group, matrices: np.ndarray, dim: int, n: int) -> np.ndarray:
    """Boundary of the normalized bar complex from degree n to degree n-1"""
    others = group.order - 1
    source_cells = others ** n
    target_cells = others ** (n - 1)
    boundary = np.zeros((target_cells * dim, source_cells * dim), dtype=np.int64)
    identity = np.eye(dim, dtype=np.int64)

    def index(cell) -> int:
        value = 0
        for g in cell:
            value = value * others + (g - 1)
        return value

    for column, cell in enumerate(product(range(1, group.order), repeat=n)):
        cols = slice(column * dim, (column + 1) * dim)
        first = index(cell[1:])
        boundary[first * dim:(first + 1) * dim, cols] += matrices[group.inverse[cell[0]]]
        for i in range(n - 1):
            merged = int(group.mult[cell[i], cell[i + 1]])
            if merged == 0:
                continue
            target = index(cell[:i] + (merged,) + cell[i + 2:])
            sign = -1 if i % 2 == 0 else 1
            boundary[target * dim:(target + 1) * dim, cols] += sign * identity
        last = index(cell[:-1])
        boundary[last * dim:(last + 1) * dim, cols] += (-1) ** n * identity
    return boundary


def bar_tor_dims(composition: Sequence[int], p: int, module: GModuleRep, m_max: int,
                 limits: Limits = DEFAULT_LIMITS) -> DimSeries:
    """dim H_m(Sigma_lambda, M) from the normalized bar complex M (x) k[G - 1]^m"""
    composition = _check_module(composition, p, module)
    require_nonnegative(m_max, "m_max")
    label = _label("bar", composition, module)
    group = young_group(composition, limits)
    matrices = element_matrices(module, group, limits)
    others = group.order - 1
    dim = module.dim

    ranks = [0]
    dims: List[int] = []
    for n in range(1, m_max + 2):
        cells = (dim * others ** (n - 1)) * (dim * others ** n)
        if cells > limits.bar_cells:
            raise CapacityError(
                f"bar complex of Sigma_{composition} in degree {n} needs {cells} cells, "
                f"beyond the limit {limits.bar_cells}",
                partial=DimSeries(p, label, tuple(dims)) if dims else None,
            )
        boundary = _bar_boundary(group, matrices, dim, n) % p
        ranks.append(fp_linalg.rank(boundary, p) if boundary.size else 0)
        m = n - 1
        dims.append(dim * others ** m - ranks[m] - ranks[m + 1])
    return DimSeries(p, label, tuple(dims))
