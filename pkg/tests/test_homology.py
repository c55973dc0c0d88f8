import pytest

from liecx.config import Limits
from liecx.errors import CapacityError, InvalidInputError
from liecx.freelie.lie_module import lie_module_rep
from liecx.oracle.group_module import permutation_module, sign_module, trivial_module
from liecx.oracle.homology import bar_tor_dims, cohomology_dims, ext_dims, tor_dims
from liecx.words.word_basis import dimension_series


def test_trivial_module_over_cyclic_group():
    assert tor_dims((2,), 2, trivial_module((2,), 2), 5).dims == (1,) * 6


def test_trivial_module_over_sigma_three():
    dims = tor_dims((3,), 3, trivial_module((3,), 3), 8).dims
    assert dims == (1, 0, 0, 1, 1, 0, 0, 1, 1)


def test_kunneth_for_klein_four():
    assert tor_dims((2, 2), 2, trivial_module((2, 2), 2), 3).dims == (1, 2, 3, 4)


def test_semisimple_case_is_coinvariants():
    assert tor_dims((2,), 3, trivial_module((2,), 3), 3).dims == (1, 0, 0, 0)
    assert tor_dims((2,), 3, sign_module((2,), 3), 3).dims == (0, 0, 0, 0)


@pytest.mark.parametrize("p,r,m_max", [(2, 1, 6), (3, 1, 6)])
def test_lie_module_matches_word_counts(p, r, m_max):
    n = p ** r
    oracle = tor_dims((n,), p, lie_module_rep(n, p, (n,)), m_max)
    assert oracle.dims == dimension_series(p, r, m_max).dims


@pytest.mark.slow
def test_lie_four_matches_word_counts():
    oracle = tor_dims((4,), 2, lie_module_rep(4, 2, (4,)), 6)
    assert oracle.dims == (0, 0, 1, 1, 1, 2, 2)


@pytest.mark.parametrize("composition,p,module", [
    ((3,), 3, sign_module((3,), 3)),
    ((2, 2), 2, permutation_module((2, 2), 2)),
    ((3,), 2, permutation_module((3,), 2)),
])
def test_ext_agrees_with_dual_homology(composition, p, module):
    assert ext_dims(composition, p, module, 4).dims == cohomology_dims(composition, p, module, 4).dims


@pytest.mark.parametrize("composition,p,module", [
    ((3,), 3, lie_module_rep(3, 3, (3,))),
    ((3,), 2, lie_module_rep(3, 2, (3,))),
    ((3, 1), 2, lie_module_rep(4, 2, (3, 1))),
])
def test_scan_strategy_gives_same_homology(composition, p, module):
    minimal = tor_dims(composition, p, module, 4).dims
    assert minimal == tor_dims(composition, p, module, 4, strategy="scan").dims


@pytest.mark.parametrize("composition,p,module", [
    ((3,), 3, trivial_module((3,), 3)),
    ((3,), 3, lie_module_rep(3, 3, (3,))),
    ((2, 2), 2, permutation_module((2, 2), 2)),
    ((1, 2), 2, sign_module((1, 2), 2)),
])
def test_bar_complex_agrees(composition, p, module):
    assert bar_tor_dims(composition, p, module, 3).dims == tor_dims(composition, p, module, 3).dims


def test_bar_cell_limit_keeps_partial_series():
    with pytest.raises(CapacityError) as excinfo:
        bar_tor_dims((3,), 3, trivial_module((3,), 3), 3, limits=Limits(bar_cells=100))
    assert excinfo.value.partial.dims == (1,)


def test_module_must_match_group():
    with pytest.raises(InvalidInputError):
        tor_dims((2,), 3, trivial_module((2,), 2), 2)
    with pytest.raises(InvalidInputError):
        tor_dims((3,), 2, trivial_module((2, 1), 2), 2)


def test_labels():
    series = tor_dims((2,), 2, trivial_module((2,), 2), 1)
    assert series.label == "tor lambda=(2) dim=1"
    assert cohomology_dims((2,), 2, trivial_module((2,), 2), 1).label.startswith("cohomology")


@pytest.mark.parametrize("n,p", [(2, 3), (3, 2)])
def test_lie_is_projective_when_p_does_not_divide_n(n, p):
    dims = tor_dims((n,), p, lie_module_rep(n, p, (n,)), 4).dims
    assert not any(dims[1:])
