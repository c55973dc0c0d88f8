"""Fit oracle homology of Lie(n) over Sigma_lambda to sums of word-basis series

H(Sigma_lambda, Lie(n)) should split as a direct sum over 0 <= r <= j(lambda) of
C_r copies of H(Sigma_{p^r}, Lie(p^r)). The fit searches nonnegative integer
C_r minimizing the total absolute residual over degrees 0..m_max.
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence, Tuple

from liecx.complexity.complexity_report import j_of_composition
from liecx.config import DEFAULT_LIMITS, Limits
from liecx.freelie.lie_module import lie_module_rep
from liecx.oracle.homology import tor_dims
from liecx.validators.input_validator import require_composition, require_nonnegative, require_prime
from liecx.words.word_basis import dimension_series


@dataclass(frozen=True)
class FitReport:
    n: int
    p: int
    composition: Tuple[int, ...]
    m_max: int
    oracle_dims: Tuple[int, ...]
    word_dims: Tuple[Tuple[int, ...], ...]
    coefficients: Tuple[int, ...]
    residual: int
    unconstrained: Tuple[int, ...] = field(default=())

    @property
    def exact(self) -> bool:
        """Whether the fit reproduces the oracle dimensions"""
        return self.residual == 0

    @property
    def positive(self) -> bool:
        """Every coefficient the data pins down is at least 1"""
        return all(c >= 1 for r, c in enumerate(self.coefficients) if r not in self.unconstrained)

    def fitted(self) -> Tuple[int, ...]:
        """Dimensions predicted by the coefficients"""
        return tuple(
            sum(c * dims[m] for c, dims in zip(self.coefficients, self.word_dims))
            for m in range(self.m_max + 1)
        )

    def to_dict(self) -> dict:
        """JSON-ready form"""
        return {
            "n": self.n,
            "p": self.p,
            "lambda": list(self.composition),
            "m_max": self.m_max,
            "j": len(self.coefficients) - 1,
            "oracle_dims": list(self.oracle_dims),
            "word_dims": [list(d) for d in self.word_dims],
            "C": list(self.coefficients),
            "fitted": list(self.fitted()),
            "residual": self.residual,
            "exact": self.exact,
            "positive": self.positive,
            "unconstrained": list(self.unconstrained),
        }


def _residual(target: Sequence[int], columns: Sequence[Sequence[int]], coefficients: Sequence[int]) -> int:
    """Sum of absolute errors of a candidate coefficient vector"""
    return sum(
        abs(value - sum(c * column[m] for c, column in zip(coefficients, columns)))
        for m, value in enumerate(target)
    )


def fit_coefficients(target: Sequence[int], columns: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], int, Tuple[int, ...]]:
    """Nonnegative integer coefficients minimizing the L1 residual; ties go to the smallest tuple"""
    unconstrained = tuple(r for r, column in enumerate(columns) if not any(column))
    bound = max(target, default=0) + 1
    ranges = [range(1) if r in unconstrained else range(bound + 1) for r in range(len(columns))]
    best: Optional[Tuple[int, Tuple[int, ...]]] = None
    for coefficients in product(*ranges):
        residual = _residual(target, columns, coefficients)
        if best is None or residual < best[0]:
            best = (residual, coefficients)
            if residual == 0:
                break
    return best[1], best[0], unconstrained


def decomposition_fit(n: int, p: int, composition: Sequence[int], m_max: int,
                      limits: Limits = DEFAULT_LIMITS) -> FitReport:
    """Fit dim H_m(Sigma_lambda, Lie(n)) to sum_r C_r dim H_m(Sigma_{p^r}, Lie(p^r))"""
    require_prime(p)
    composition = require_composition(composition, total=n)
    require_nonnegative(m_max, "m_max")
    oracle = tor_dims(composition, p, lie_module_rep(n, p, composition), m_max, limits=limits)
    j = j_of_composition(composition, p)
    columns = tuple(dimension_series(p, r, m_max).dims for r in range(j + 1))
    coefficients, residual, unconstrained = fit_coefficients(oracle.dims, columns)
    return FitReport(n, p, composition, m_max, oracle.dims, columns, coefficients, residual, unconstrained)
