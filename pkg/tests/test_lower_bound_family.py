import pytest

from liecx.errors import InvalidInputError
from liecx.growth.lower_bound_family import (
    FamilySpec,
    composition_count,
    family_common_total,
    family_measured_formula,
    family_report,
    family_stated_formula,
    lower_bound_family,
)
from liecx.words.word_basis import DLWord, count_words


def test_small_family_by_hand():
    words = lower_bound_family(FamilySpec(2, 2, 3))
    assert words == [DLWord((9, 3)), DLWord((10, 2)), DLWord((11, 1))]


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("x", [1, 2, 5])
def test_family_report(p, r, x):
    report = family_report(FamilySpec(p, r, x))
    assert report["count"] == x ** (r - 1)
    assert report["all_admissible"]
    assert len(report["degrees"]) == 1
    assert report["measured_total"] == report["construction_total"]
    assert report["deviation"] == x


@pytest.mark.parametrize("p,r,x", [(2, 2, 4), (3, 2, 3), (2, 3, 3)])
def test_family_fits_inside_one_degree(p, r, x):
    spec = FamilySpec(p, r, x)
    degree = family_report(spec)["degrees"][0]
    assert count_words(p, r, degree) >= x ** (r - 1)


def test_formulas():
    assert family_measured_formula(3, 3, 2) == 36
    assert family_stated_formula(3, 3, 2) == 34
    assert family_common_total(FamilySpec(3, 3, 2)) == 36


@pytest.mark.parametrize("args", [(4, 2, 1), (2, 0, 1), (2, 2, 0)])
def test_invalid_family(args):
    with pytest.raises(InvalidInputError):
        FamilySpec(*args)


def test_composition_count():
    assert composition_count(5, 2) == 4
    assert composition_count(6, 3) == 10
    assert composition_count(1, 2) == 0
