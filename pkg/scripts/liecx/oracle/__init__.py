from liecx.oracle.group_module import (
    GModuleRep,
    coinvariants_dim,
    dual_module,
    element_matrices,
    invariants_dim,
    permutation_module,
    random_module,
    sign_module,
    trivial_module,
)
from liecx.oracle.homology import bar_tor_dims, cohomology_dims, ext_dims, tor_dims
from liecx.oracle.radical import group_algebra, jacobson_radical, nilpotency_index
from liecx.oracle.resolution_builder import Resolution, resolution, verify_resolution

# decomposition_fit lives in liecx.oracle.decomposition; it builds Lie modules, which import this package

__all__ = [
    "GModuleRep",
    "Resolution",
    "bar_tor_dims",
    "coinvariants_dim",
    "cohomology_dims",
    "dual_module",
    "element_matrices",
    "ext_dims",
    "group_algebra",
    "invariants_dim",
    "jacobson_radical",
    "nilpotency_index",
    "permutation_module",
    "random_module",
    "resolution",
    "sign_module",
    "tor_dims",
    "trivial_module",
    "verify_resolution",
]
