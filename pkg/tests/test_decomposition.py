import pytest

from liecx.errors import InvalidInputError
from liecx.oracle.decomposition import decomposition_fit, fit_coefficients


def test_exact_fit():
    coefficients, residual, unconstrained = fit_coefficients((2, 1, 1), ((1, 0, 0), (1, 1, 1)))
    assert coefficients == (1, 1)
    assert residual == 0
    assert unconstrained == ()


def test_zero_columns_are_unconstrained():
    coefficients, residual, unconstrained = fit_coefficients((0, 0, 1), ((1, 0, 0), (0, 0, 0), (0, 0, 1)))
    assert coefficients == (0, 0, 1)
    assert residual == 0
    assert unconstrained == (1,)


def test_best_inexact_fit():
    coefficients, residual, _ = fit_coefficients((1, 3), ((1, 1),))
    assert residual == 2
    assert coefficients in {(1,), (2,), (3,)}
    assert coefficients == (1,)


def test_trivial_young_subgroup_is_all_degree_zero():
    fit = decomposition_fit(3, 2, (1, 1, 1), 3)
    assert fit.oracle_dims == (2, 0, 0, 0)
    assert fit.coefficients == (2,)
    assert fit.exact and fit.positive


def test_cyclic_two_on_lie_two():
    fit = decomposition_fit(2, 2, (2,), 5)
    assert fit.coefficients == (0, 1)
    assert fit.exact
    assert not fit.positive
    payload = fit.to_dict()
    assert payload["j"] == 1
    assert payload["fitted"] == list(fit.oracle_dims)


@pytest.mark.slow
def test_lie_four_over_sigma_four():
    fit = decomposition_fit(4, 2, (4,), 6)
    assert fit.exact
    assert fit.coefficients == (0, 0, 1)


@pytest.mark.slow
@pytest.mark.parametrize("composition", [(2, 2), (1, 3)])
def test_lie_four_over_smaller_subgroups(composition):
    fit = decomposition_fit(4, 2, composition, 6)
    assert fit.exact


def test_composition_must_sum_to_n():
    with pytest.raises(InvalidInputError):
        decomposition_fit(4, 2, (2, 1), 3)
