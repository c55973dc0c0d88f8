"""Complexity of Lie(n) over the symmetric group

c(Lie(n)) is the largest gamma of H(Sigma_{p^r}, Lie(p^r)) over 0 <= r <= v_p(n),
and that gamma is r, so the complexity is v_p(n). Audited reports also measure
each gamma from the word counts and flag any disagreement.
"""
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import multiplicity

from liecx import config
from liecx.errors import InvalidInputError
from liecx.growth.growth_estimator import GammaEstimate, gamma_estimate
from liecx.validators.input_validator import require_composition, require_positive, require_prime
from liecx.words.word_basis import dimension_series

MAX_AUDITED_VALUATION = 4


def p_valuation(n: int, p: int) -> int:
    """Largest t with p^t dividing n"""
    require_positive(n, "n")
    require_prime(p)
    return int(multiplicity(p, n))


def j_of_composition(composition: Sequence[int], p: int) -> int:
    """v_p of the gcd of the parts"""
    composition = require_composition(composition)
    return p_valuation(reduce(gcd, composition), p)


@dataclass(frozen=True)
class ComplexityReport:
    n: int
    p: int
    t: int
    conclusion: int
    per_r: Tuple[Tuple[int, Optional[GammaEstimate]], ...] = field(default=())
    audited: bool = False
    mismatches: Tuple[int, ...] = field(default=())

    @property
    def consistent(self) -> bool:
        """Whether the audited estimates agree with the word counts"""
        return not self.mismatches

    def to_dict(self) -> dict:
        """JSON-ready form with the per-r rows"""
        return {
            "n": self.n,
            "p": self.p,
            "t": self.t,
            "conclusion": self.conclusion,
            "audited": self.audited,
            "per_r": [
                {"r": r, "estimate": estimate.to_dict() if estimate else None}
                for r, estimate in self.per_r
            ],
            "mismatches": list(self.mismatches),
        }


def _estimate_for(p: int, r: int, m_max: int) -> GammaEstimate:
    """gamma estimate of the (p, r) word series of length m_max + 1"""
    return gamma_estimate(dimension_series(p, r, m_max))


def complexity_lie(n: int, p: int, audited: bool = False, m_max: Optional[int] = None) -> ComplexityReport:
    """Complexity of Lie(n) over F_p Sigma_n, optionally audited against word counts"""
    t = p_valuation(n, p)
    if not audited:
        return ComplexityReport(n, p, t, t)
    if t > MAX_AUDITED_VALUATION:
        raise InvalidInputError(
            f"audited mode supports v_p(n) <= {MAX_AUDITED_VALUATION}, got {t} for n={n}, p={p}"
        )
    m_max = config.audit_m_max(p) if m_max is None else m_max

    # r = 0 is the projective part and contributes 0
    estimates: Dict[int, GammaEstimate] = {}
    with ThreadPoolExecutor(max_workers=config.THREADS) as executor:
        future_to_r = {executor.submit(_estimate_for, p, r, m_max): r for r in range(1, t + 1)}
        for future in as_completed(future_to_r):
            estimates[future_to_r[future]] = future.result()

    per_r = ((0, None),) + tuple((r, estimates[r]) for r in range(1, t + 1))
    mismatches = tuple(r for r in range(1, t + 1) if estimates[r].gamma != r)
    return ComplexityReport(n, p, t, t, per_r, audited=True, mismatches=mismatches)


def branching_gamma(n: int, p: int, composition: Sequence[int]) -> int:
    """gamma of H(Sigma_lambda, Lie(n)): the max of r over 0 <= r <= j(lambda)"""
    require_positive(n, "n")
    composition = require_composition(composition, total=n)
    return j_of_composition(composition, p)


def iter_compositions(n: int) -> Iterator[Tuple[int, ...]]:
    """Every composition of n, in lexicographic order"""
    require_positive(n, "n")

    def grow(remaining: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(1, remaining + 1):
            for rest in grow(remaining - first):
                yield (first,) + rest

    yield from grow(n)


def max_branching_gamma(n: int, p: int) -> Tuple[int, List[Tuple[int, ...]]]:
    """Largest branching gamma over all compositions of n, and the compositions attaining it"""
    best = -1
    attained: List[Tuple[int, ...]] = []
    for composition in iter_compositions(n):
        value = branching_gamma(n, p, composition)
        if value > best:
            best, attained = value, [composition]
        elif value == best:
            attained.append(composition)
    return best, attained
