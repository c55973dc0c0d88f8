"""Sigma_n acting on Lie(n) by permuting letters"""
from functools import lru_cache
from math import factorial
from typing import Sequence, Tuple

import numpy as np
import pyparsing as pp

from liecx.errors import InvalidInputError
from liecx.freelie.lyndon_basis import check_arity, lyndon_basis, normal_form, relabel
from liecx.oracle.group_module import GModuleRep
from liecx.oracle.young_group import coxeter_positions
from liecx.validators.input_validator import require_composition, require_permutation, require_prime


def _cycle_grammar() -> pp.ParserElement:
    """pyparsing grammar for cycle notation"""
    number = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
    cycle = pp.Group(pp.Suppress("(") + pp.ZeroOrMore(number + pp.Optional(pp.Suppress(","))) + pp.Suppress(")"))
    return pp.ZeroOrMore(cycle)


CYCLE_GRAMMAR = _cycle_grammar()


def parse_permutation(text: str, n: int) -> Tuple[int, ...]:
    """Images (sigma(1), ..., sigma(n)) of a permutation written in cycle notation, e.g. "(1 2)(3 4)" """
    try:
        cycles = CYCLE_GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise InvalidInputError(f"cannot parse permutation {text!r}: {e}")
    images = list(range(1, n + 1))
    seen = set()
    for cycle in cycles:
        points = list(cycle)
        for point in points:
            if not 1 <= point <= n:
                raise InvalidInputError(f"point {point} of {text!r} is outside 1..{n}")
            if point in seen:
                raise InvalidInputError(f"point {point} appears twice in {text!r}")
            seen.add(point)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b
    return tuple(images)


def format_permutation(images: Sequence[int]) -> str:
    """Cycle notation without fixed points; "()" for the identity"""
    seen = set()
    cycles = []
    for start in range(1, len(images) + 1):
        if start in seen or images[start - 1] == start:
            continue
        cycle = [start]
        seen.add(start)
        point = images[start - 1]
        while point != start:
            cycle.append(point)
            seen.add(point)
            point = images[point - 1]
        cycles.append("(" + " ".join(str(c) for c in cycle) + ")")
    return "".join(cycles) or "()"


def compose_permutations(sigma: Sequence[int], tau: Sequence[int]) -> Tuple[int, ...]:
    """(sigma tau)(i) = sigma(tau(i))"""
    return tuple(sigma[t - 1] for t in tau)


@lru_cache(maxsize=256)
def _action_matrix(n: int, p: int, sigma: Tuple[int, ...]) -> np.ndarray:
    """Cached action matrix for an already validated permutation"""
    basis = lyndon_basis(n)
    columns = [normal_form(relabel(tree, sigma), n, p).to_vector() for tree in basis]
    matrix = np.stack(columns, axis=1) if columns else np.zeros((0, 0), dtype=np.int64)
    matrix.setflags(write=False)
    return matrix


def action_matrix(n: int, p: int, sigma: Sequence[int]) -> np.ndarray:
    """Matrix of sigma on Lie(n): column j is the normal form of sigma applied to basis element j"""
    require_prime(p)
    check_arity(n)
    sigma = require_permutation(sigma, n)
    return _action_matrix(n, p, sigma)


def lie_module_rep(n: int, p: int, composition: Sequence[int]) -> GModuleRep:
    """Lie(n) restricted to the Young subgroup Sigma_lambda"""
    require_prime(p)
    check_arity(n)
    composition = require_composition(composition, total=n)
    gens = []
    for i in coxeter_positions(composition):
        images = list(range(1, n + 1))
        images[i], images[i + 1] = images[i + 1], images[i]
        gens.append(action_matrix(n, p, images))
    return GModuleRep(p, composition, factorial(n - 1), tuple(gens))
