from liecx.words.dim_series import DimSeries
from liecx.words.word_basis import (
    DLWord,
    count_words,
    dimension,
    dimension_series,
    enumerate_words,
    homology_degree,
    is_admissible,
    monomial_bound,
    word_degree,
)

__all__ = [
    "DLWord",
    "DimSeries",
    "count_words",
    "dimension",
    "dimension_series",
    "enumerate_words",
    "homology_degree",
    "is_admissible",
    "monomial_bound",
    "word_degree",
]
