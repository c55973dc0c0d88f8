import pytest

from liecx.errors import InsufficientDataError, InvalidInputError
from liecx.growth.growth_estimator import MIN_SERIES_LENGTH, fit_window, gamma_estimate, shift_series
from liecx.words.dim_series import DimSeries
from liecx.words.word_basis import dimension_series


@pytest.mark.parametrize("p,r,m_max", [(2, 1, 400), (2, 2, 400), (3, 1, 400), (3, 2, 800), (2, 3, 1000)])
def test_word_series_grow_like_r(p, r, m_max):
    assert gamma_estimate(dimension_series(p, r, m_max)).gamma == r


def test_constant_series_has_gamma_one():
    estimate = gamma_estimate(DimSeries(2, "const", (1,) * 100))
    assert estimate.gamma == 1
    assert estimate.window == fit_window(100)


def test_zero_series_is_degenerate():
    estimate = gamma_estimate(DimSeries(2, "zero", (0,) * 40))
    assert estimate.gamma == 1
    assert "identically zero" in estimate.confidence_note


def test_series_vanishing_late_is_bounded():
    estimate = gamma_estimate(DimSeries(2, "finite", (3, 2, 1) + (0,) * 40))
    assert estimate.gamma == 1
    assert estimate.confidence_note.startswith("degenerate")


def test_short_series_rejected():
    with pytest.raises(InsufficientDataError):
        gamma_estimate(DimSeries(2, "short", (1,) * (MIN_SERIES_LENGTH - 1)))


def test_quadratic_dimensions_give_three():
    dims = tuple(m * m for m in range(300))
    assert gamma_estimate(DimSeries(3, "squares", dims)).gamma == 3


@pytest.mark.parametrize("shift", [0, 1, 5, 10])
def test_shift_does_not_change_gamma(shift):
    series = dimension_series(2, 2, 400)
    shifted = shift_series(series, shift)
    assert shifted.dims[:shift] == (0,) * shift
    assert shifted.dims[shift:] == series.dims
    assert gamma_estimate(shifted).gamma == gamma_estimate(series).gamma


def test_negative_shift_rejected():
    with pytest.raises(InvalidInputError):
        shift_series(DimSeries(2, "x", (1,)), -1)
