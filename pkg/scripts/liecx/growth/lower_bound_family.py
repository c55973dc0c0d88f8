"""Explicit families of basis words that force gamma >= r

Fix p, r and x. Choose s_r in [1, x] and, for 1 <= j <= r-2,
s_{r-j} in [W_j x - x + 1, W_j x] where W_j = 1 + p + ... + p^j, so that each
exponent clears p times the one below it. The top exponent is then fixed as
s_1 = W_{r-1} x + sum_j (W_j x - s_{r-j}). Every choice gives an admissible
word without Bocksteins and all of them share sum(s), so x^(r-1) words sit in
one homology degree that is linear in x.
"""
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import List

from liecx.errors import InvalidInputError
from liecx.validators.input_validator import require_nonnegative, require_positive, require_prime
from liecx.words.word_basis import DLWord, homology_degree, is_admissible


@dataclass(frozen=True)
class FamilySpec:
    p: int
    r: int
    x: int

    def __post_init__(self):
        require_prime(self.p)
        require_positive(self.r, "r")
        require_positive(self.x, "x")


def _geometric(p: int, j: int) -> int:
    """1 + p + ... + p^j"""
    return sum(p ** i for i in range(j + 1))


def lower_bound_family(spec: FamilySpec) -> List[DLWord]:
    """The x^(r-1) words of the lower-bound construction, sorted by exponents"""
    p, r, x = spec.p, spec.r, spec.x
    # ranges for s_r, s_{r-1}, ..., s_2
    ranges = [range(_geometric(p, j) * x - x + 1, _geometric(p, j) * x + 1) for j in range(r - 1)]
    words = []
    for lower in product(*ranges):
        top = _geometric(p, r - 1) * x + sum(_geometric(p, j) * x - s for j, s in enumerate(lower))
        words.append(DLWord((top,) + tuple(reversed(lower))))
    words.sort()
    return words


def family_common_total(spec: FamilySpec) -> int:
    """sum(s) shared by every word of the family, measured on the words"""
    totals = {sum(word.s) for word in lower_bound_family(spec)}
    if len(totals) != 1:
        raise InvalidInputError(f"family {spec} does not share one total: {sorted(totals)}")
    return totals.pop()


def family_measured_formula(p: int, r: int, x: int) -> int:
    """(p^{r-1} + 2p^{r-2} + ... + (r-1)p + r) x, what the construction produces"""
    return (sum(k * p ** (r - k) for k in range(1, r)) + r) * x


def family_stated_formula(p: int, r: int, x: int) -> int:
    """(p^{r-1} + 2p^{r-2} + ... + (r-1)p + (r-1)) x, the closed form as usually quoted"""
    return (sum(k * p ** (r - k) for k in range(1, r)) + r - 1) * x


def family_report(spec: FamilySpec) -> dict:
    """Count, admissibility, degree and closed-form comparison for one family"""
    words = lower_bound_family(spec)
    degrees = sorted({homology_degree(word, spec.p, spec.r) for word in words})
    measured = family_common_total(spec)
    stated = family_stated_formula(spec.p, spec.r, spec.x)
    return {
        "p": spec.p,
        "r": spec.r,
        "x": spec.x,
        "count": len(words),
        "expected_count": spec.x ** (spec.r - 1),
        "all_admissible": all(is_admissible(word, spec.p) for word in words),
        "degrees": degrees,
        "measured_total": measured,
        "construction_total": family_measured_formula(spec.p, spec.r, spec.x),
        "stated_total": stated,
        "deviation": measured - stated,
    }


def composition_count(m: int, r: int) -> int:
    """Compositions of m into exactly r positive parts"""
    require_nonnegative(m, "m")
    require_positive(r, "r")
    if m < r:
        return 0
    return comb(m - 1, r - 1)
