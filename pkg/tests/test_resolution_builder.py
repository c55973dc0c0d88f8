import numpy as np
import pytest

from liecx.config import Limits
from liecx.errors import CapacityError, InvalidInputError, OracleError
from liecx.oracle import fp_linalg
from liecx.oracle.group_module import trivial_module
from liecx.oracle.homology import tor_dims
from liecx.oracle.radical import jacobson_radical
from liecx.oracle.resolution_builder import (
    Resolution,
    augmentation_kernel,
    radical_generators,
    resolution,
    verify_resolution,
)
from liecx.oracle.young_group import algebra_product, young_group


@pytest.mark.parametrize("strategy", ["minimal", "scan"])
def test_cyclic_group_of_order_two(strategy):
    res = resolution((2,), 2, 5, strategy)
    assert res.ranks == (1,) * 6
    verify_resolution(res)


@pytest.mark.parametrize("strategy", ["minimal", "scan"])
def test_klein_four_ranks(strategy):
    res = resolution((2, 2), 2, 3, strategy)
    assert res.ranks == (1, 2, 3, 4)
    verify_resolution(res)


def test_sigma_three_at_two_needs_one_generator_per_degree():
    res = resolution((3,), 2, 5)
    assert res.ranks == (1,) * 6
    verify_resolution(res)


def test_minimal_ranks_are_homology_dimensions():
    # p-groups, plus Sigma_3 at p = 2 whose minimal resolution has rank one throughout
    for composition, p in [((2,), 2), ((2, 2), 2), ((2, 1), 2), ((2, 2, 1), 2), ((3,), 2)]:
        res = resolution(composition, p, 4)
        assert res.ranks == tor_dims(composition, p, trivial_module(composition, p), 4).dims


def test_minimal_never_exceeds_scan():
    for composition, p in [((3,), 2), ((4,), 2), ((3,), 3), ((2, 2), 2)]:
        minimal = resolution(composition, p, 4).ranks
        scanned = resolution(composition, p, 4, "scan").ranks
        assert all(a <= b for a, b in zip(minimal, scanned))


@pytest.mark.parametrize("strategy", ["minimal", "scan"])
def test_order_twenty_four_reaches_degree_five(strategy):
    res = resolution((4,), 2, 5, strategy)
    assert res.length == 5
    assert res.ranks[-1] * 24 <= Limits().width
    verify_resolution(res)


def test_generator_choice_is_reproducible():
    first = resolution((3,), 2, 3, limits=Limits(width=4999))
    second = resolution((3,), 2, 3, limits=Limits(width=4998))
    assert first.ranks == second.ranks
    assert all(np.array_equal(a, b) for a, b in zip(first.differentials, second.differentials))


@pytest.mark.parametrize("composition,p", [((2,), 3), ((1, 1), 2), ((1, 1), 5)])
def test_semisimple_algebras(composition, p):
    res = resolution(composition, p, 3)
    assert res.semisimple
    assert res.ranks == (1, 0, 0, 0)
    verify_resolution(res)


@pytest.mark.parametrize("composition,p", [((3,), 3), ((3,), 2), ((1, 2), 2)])
def test_resolutions_are_complexes(composition, p):
    res = resolution(composition, p, 4)
    assert res.length == 4
    assert all(d.shape == (res.ranks[n + 1], res.ranks[n], young_group(composition).order)
               for n, d in enumerate(res.differentials))
    verify_resolution(res)


def test_augmentation_kernel():
    kernel = augmentation_kernel(young_group((3,)), 3)
    assert kernel.shape == (5, 6)
    assert not np.any(kernel.sum(axis=1) % 3)


def test_broken_differential_is_caught():
    res = resolution((2,), 2, 2)
    broken = Resolution(2, (2,), res.ranks, (res.differentials[0], np.array([[[1, 0]]], dtype=np.int64)))
    with pytest.raises(OracleError):
        verify_resolution(broken)


def test_width_limit_keeps_partial_resolution():
    with pytest.raises(CapacityError) as excinfo:
        resolution((2, 2), 2, 5, limits=Limits(width=10))
    assert excinfo.value.partial.ranks == (1, 2)


def test_unknown_strategy():
    with pytest.raises(InvalidInputError):
        resolution((2,), 2, 2, strategy="bar")


def test_to_dict():
    payload = resolution((2,), 2, 1).to_dict()
    assert payload["ranks"] == [1, 1]
    assert payload["lambda"] == [2]
    assert payload["differentials"] == [[[[1, 1]]]]


@pytest.mark.parametrize("composition,p", [((3,), 2), ((3,), 3), ((2, 2), 2), ((4,), 3)])
def test_radical_generators_span_the_radical_as_right_ideal(composition, p):
    group = young_group(composition)
    radical = jacobson_radical(composition, p)
    generators = radical_generators(group, radical, p)
    span = fp_linalg.Subspace(group.order, p)
    for element in generators:
        for g in range(group.order):
            span.extend(algebra_product(group, element, np.eye(group.order, dtype=np.int64)[g], p))
    assert span.dim == radical.shape[0]
    assert all(row in span for row in radical)
