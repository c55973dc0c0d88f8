import pytest

from liecx.errors import CapacityError, InvalidInputError
from liecx.growth.lower_bound_family import composition_count
from liecx.words.dim_series import DimSeries
from liecx.words.word_basis import (
    DLWord,
    count_words,
    dimension_series,
    enumerate_words,
    homology_degree,
    is_admissible,
    monomial_bound,
    word_degree,
)


def test_length_one_at_two_is_one_in_every_degree():
    assert dimension_series(2, 1, 10).dims == (1,) * 11


def test_length_two_at_two():
    assert dimension_series(2, 2, 8).dims == (0, 0, 1, 1, 1, 2, 2, 2, 3)


def test_length_one_at_three_is_periodic():
    assert dimension_series(3, 1, 11).dims == (0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1)


def test_empty_word_only_in_degree_zero():
    assert dimension_series(5, 0, 4).dims == (1, 0, 0, 0, 0)


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_count_matches_enumeration(p, r):
    for m in range(0, 51):
        words = enumerate_words(p, r, m)
        assert count_words(p, r, m) == len(words)
        assert all(is_admissible(word, p) for word in words)
        assert all(homology_degree(word, p, r) == m for word in words)


def test_enumeration_is_sorted_and_distinct():
    words = enumerate_words(3, 2, 30)
    assert words == sorted(words)
    assert len(set(words)) == len(words)


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_monomial_bound_dominates(p, r):
    for m in range(201):
        assert count_words(p, r, m) <= monomial_bound(p, r, m)


def test_admissibility_with_bockstein():
    # s_1 > p*s_2 - eps_2
    assert is_admissible(DLWord((3, 1), (0, 1)), 3)
    assert not is_admissible(DLWord((3, 1), (0, 0)), 3)
    assert is_admissible(DLWord((4, 1), (0, 0)), 3)


def test_degrees():
    word = DLWord((3, 1))
    assert word_degree(word, 2) == 5
    assert homology_degree(word, 2, 2) == 2
    assert word_degree(DLWord((1,), (1,)), 3) == 4


def test_word_rendering():
    assert str(DLWord((2, 1), (1, 0))) == "βQ^2 Q^1 u"
    assert str(DLWord()) == "u"


@pytest.mark.parametrize("s,eps", [((0,), (0,)), ((1, 2), (0,)), ((1,), (2,))])
def test_malformed_words_rejected(s, eps):
    with pytest.raises(InvalidInputError):
        DLWord(s, eps)


def test_bockstein_rejected_at_two():
    with pytest.raises(InvalidInputError):
        word_degree(DLWord((1,), (1,)), 2)


def test_homology_degree_checks_length():
    with pytest.raises(InvalidInputError):
        homology_degree(DLWord((1,)), 2, 2)


@pytest.mark.parametrize("p", [1, 4, -3])
def test_non_prime_rejected(p):
    with pytest.raises(InvalidInputError):
        dimension_series(p, 1, 3)


def test_capacity_returns_partial(monkeypatch):
    monkeypatch.setattr("liecx.config.MAX_SERIES_DEGREE", 5)
    with pytest.raises(CapacityError) as excinfo:
        dimension_series(2, 1, 10)
    assert excinfo.value.partial.dims == (1,) * 6


def test_dim_series_round_trip_through_dict():
    series = DimSeries(3, "x", (1, 0, 2))
    assert DimSeries.from_dict(series.to_dict()) == series
    with pytest.raises(InvalidInputError):
        DimSeries.from_dict({"p": 3, "dims": [1], "m_max": 4})
    with pytest.raises(InvalidInputError):
        DimSeries(2, "bad", (1, -1))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_composition_bound_at_two(r):
    for m in range(80):
        assert count_words(2, r, m) <= composition_count(m + r, r)


@pytest.mark.parametrize("s,eps,p,expected", [
    ((4, 1), (0, 0), 2, True),
    ((4, 2), (0, 0), 2, False),
    ((5, 2), (0, 1), 3, False),
    ((6, 2), (0, 1), 3, True),
    ((), (), 3, True),
])
def test_admissibility_examples(s, eps, p, expected):
    assert is_admissible(DLWord(s, eps), p) is expected


def test_enumeration_examples():
    assert enumerate_words(2, 2, 2) == [DLWord((3, 1))]
    assert enumerate_words(2, 2, 0) == []
    assert enumerate_words(2, 1, 7) == [DLWord((8,))]
    assert homology_degree(DLWord(), 7, 0) == 0
    assert word_degree(DLWord((2,), (0,)), 3) == 9
    assert word_degree(DLWord((2,), (1,)), 3) == 8


def test_large_series_is_fast():
    series = dimension_series(2, 4, 10_000)
    assert len(series) == 10_001
    assert series[10_000] > 0
