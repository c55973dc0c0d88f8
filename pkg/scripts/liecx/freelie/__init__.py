from liecx.freelie.lie_module import action_matrix, lie_module_rep, parse_permutation
from liecx.freelie.lyndon_basis import (
    LieElement,
    combination_by_expansion,
    combination_normal_form,
    format_tree,
    lyndon_basis,
    normal_form,
    normal_form_by_expansion,
    parse_tree,
    random_tree,
)

__all__ = [
    "LieElement",
    "action_matrix",
    "combination_by_expansion",
    "combination_normal_form",
    "format_tree",
    "lie_module_rep",
    "lyndon_basis",
    "normal_form",
    "normal_form_by_expansion",
    "parse_permutation",
    "parse_tree",
    "random_tree",
]
