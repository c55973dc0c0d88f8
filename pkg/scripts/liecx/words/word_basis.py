"""Admissible Dyer-Lashof words and the dimensions of H_m(Sigma_{p^r}, Lie(p^r))

A word beta^{e_1} Q^{s_1} ... beta^{e_r} Q^{s_r} u is stored as the exponent
list s and the Bockstein flags eps. The class u sits in degree 1, Q^s raises
degree by s (p = 2) or 2s(p-1) (p odd) and a Bockstein lowers it by one. The
words of length r are a basis of the (1+r)-fold suspension of the homology, so
the homology degree of a word is its internal degree minus 1+r.

Counting uses the slack variables of the admissibility chain. Writing
c_j = s_j - p*s_{j+1} (c_r = s_r) turns the chain into c_j >= 1 - eps_{j+1},
and sum(s) = sum_k c_k * w_k with w_k = 1 + p + ... + p^{k-1}. The number of
admissible s for a fixed eps and total is therefore a coin-change count with
coins w_1..w_r, shared by every eps vector.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator, List, Tuple

from liecx import config
from liecx.errors import CapacityError, InvalidInputError
from liecx.validators.input_validator import require_nonnegative, require_prime
from liecx.words.dim_series import DimSeries


@dataclass(frozen=True, order=True)
class DLWord:
    """A Dyer-Lashof word: exponents s_1..s_r and Bockstein flags eps_1..eps_r"""
    s: Tuple[int, ...] = field(default=())
    eps: Tuple[int, ...] = field(default=None)

    def __post_init__(self):
        s = tuple(self.s)
        eps = tuple(self.eps) if self.eps is not None else (0,) * len(s)
        if len(eps) != len(s):
            raise InvalidInputError(f"eps {eps} and s {s} have different lengths")
        for value in s:
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidInputError(f"exponents must be positive integers, got {s}")
        for flag in eps:
            if flag not in (0, 1):
                raise InvalidInputError(f"Bockstein flags must be 0 or 1, got {eps}")
        object.__setattr__(self, 's', s)
        object.__setattr__(self, 'eps', eps)

    @property
    def length(self) -> int:
        """Number of letters r"""
        return len(self.s)

    def __str__(self) -> str:
        ops = [("β" if e else "") + f"Q^{s}" for s, e in zip(self.s, self.eps)]
        return " ".join(ops + ["u"])

    def to_dict(self) -> dict:
        """JSON-ready form with the degree"""
        return {"s": list(self.s), "eps": list(self.eps)}


def _degree_unit(p: int) -> int:
    """2(p-1) for odd p, 1 for p = 2"""
    return 1 if p == 2 else 2 * (p - 1)


def _check_word(word: DLWord, p: int) -> None:
    """Raise on a bad prime, or on Bocksteins at p = 2"""
    require_prime(p)
    if p == 2 and any(word.eps):
        raise InvalidInputError(f"Bocksteins do not occur at p = 2: {word}")


def is_admissible(word: DLWord, p: int) -> bool:
    """Check s_j > p*s_{j+1} - eps_{j+1} for every consecutive pair"""
    _check_word(word, p)
    s, eps = word.s, word.eps
    return all(s[j] > p * s[j + 1] - eps[j + 1] for j in range(len(s) - 1))


def word_degree(word: DLWord, p: int) -> int:
    """Internal degree of the word inside the suspended homology, u counted as 1"""
    _check_word(word, p)
    return 1 + sum(_degree_unit(p) * s - e for s, e in zip(word.s, word.eps))


def homology_degree(word: DLWord, p: int, r: int) -> int:
    """Homology degree m of a word of length r"""
    if word.length != r:
        raise InvalidInputError(f"word {word} has length {word.length}, expected {r}")
    return word_degree(word, p) - (1 + r)


def _eps_vectors(p: int, r: int) -> Iterator[Tuple[int, ...]]:
    """Every Bockstein pattern allowed for r letters"""
    if p == 2:
        yield (0,) * r
    else:
        yield from product((0, 1), repeat=r)


def _exponent_chains(p: int, eps: Tuple[int, ...], total: int) -> Iterator[Tuple[int, ...]]:
    """Admissible exponent lists for fixed Bockstein flags and fixed sum, grown from s_r up"""
    r = len(eps)
    if r == 0:
        if total == 0:
            yield ()
        return

    def grow(i: int, remaining: int, suffix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        lower = 1 if i == r - 1 else p * suffix[0] - eps[i + 1] + 1
        if i == 0:
            if remaining >= lower:
                yield (remaining,) + suffix
            return
        # s_{i-1}, ..., s_0 are at least p, p^2, ... times s_i
        reach = sum(p ** k for k in range(1, i + 1))
        value = lower
        while remaining - value >= value * reach:
            yield from grow(i - 1, remaining - value, (value,) + suffix)
            value += 1

    yield from grow(r - 1, total, ())


def _check_word_length(r: int) -> None:
    """Raise past the configured word length limit"""
    require_nonnegative(r, "r")
    if r > config.MAX_WORD_LENGTH:
        raise CapacityError(f"word length {r} exceeds the configured maximum {config.MAX_WORD_LENGTH}")


def enumerate_words(p: int, r: int, m: int) -> List[DLWord]:
    """All admissible words of length r in homology degree m, ordered by (s, eps)"""
    require_prime(p)
    _check_word_length(r)
    require_nonnegative(m, "m")
    unit = _degree_unit(p)
    words = []
    for eps in _eps_vectors(p, r):
        shifted = m + r + sum(eps)
        if shifted % unit:
            continue
        for s in _exponent_chains(p, eps, shifted // unit):
            words.append(DLWord(s, eps))
    words.sort()
    return words


def _coin_weights(p: int, r: int) -> Tuple[int, ...]:
    """Weights (p^k - 1) / (p - 1) for k = 1..r"""
    return tuple((p ** k - 1) // (p - 1) for k in range(1, r + 1))


def _chain_offset(p: int, eps: Tuple[int, ...]) -> int:
    """Smallest sum(s) an admissible chain with these flags can have"""
    weights = _coin_weights(p, len(eps))
    # slack c_k has floor 1 - eps_{k+1}; the last one has no successor
    floors = [1 - eps[k] for k in range(1, len(eps))] + [1]
    return sum(w * f for w, f in zip(weights, floors))


@lru_cache(maxsize=64)
def _coin_table(p: int, r: int, limit: int) -> Tuple[int, ...]:
    """ways[N] = number of nonnegative solutions of sum_k w_k d_k = N, 0 <= N <= limit"""
    ways = [0] * (limit + 1)
    ways[0] = 1
    for weight in _coin_weights(p, r):
        for total in range(weight, limit + 1):
            ways[total] += ways[total - weight]
    return tuple(ways)


def count_words(p: int, r: int, m: int) -> int:
    """Number of admissible words of length r in degree m, without listing them"""
    require_prime(p)
    _check_word_length(r)
    require_nonnegative(m, "m")
    return _series_counts(p, r, m, m)[0]


def _series_counts(p: int, r: int, m_lo: int, m_hi: int) -> List[int]:
    """Word counts for degrees m_lo..m_hi"""
    unit = _degree_unit(p)
    table = _coin_table(p, r, (m_hi + 2 * r) // unit)
    counts = [0] * (m_hi - m_lo + 1)
    for eps in _eps_vectors(p, r):
        offset = _chain_offset(p, eps)
        bocksteins = sum(eps)
        for m in range(m_lo, m_hi + 1):
            shifted = m + r + bocksteins
            if shifted % unit:
                continue
            slack = shifted // unit - offset
            if slack >= 0:
                counts[m - m_lo] += table[slack]
    return counts


def dimension(p: int, r: int, m: int) -> int:
    """dim H_m(Sigma_{p^r}, Lie(p^r)) as the number of basis words in degree m"""
    return count_words(p, r, m)


def dimension_series(p: int, r: int, m_max: int) -> DimSeries:
    """Dimensions of H_m(Sigma_{p^r}, Lie(p^r)) for 0 <= m <= m_max"""
    require_prime(p)
    _check_word_length(r)
    require_nonnegative(m_max, "m_max")
    label = f"words p={p} r={r}"
    if m_max > config.MAX_SERIES_DEGREE:
        partial = DimSeries(p, label, tuple(_series_counts(p, r, 0, config.MAX_SERIES_DEGREE)))
        raise CapacityError(
            f"m_max {m_max} exceeds the configured maximum degree {config.MAX_SERIES_DEGREE}",
            partial=partial,
        )
    return DimSeries(p, label, tuple(_series_counts(p, r, 0, m_max)))


def monomial_bound(p: int, r: int, m: int) -> int:
    """Monomials of Lambda(e_1..e_r) (x) k[x_1..x_r] in the degree of words of homology degree m

    A word maps to x^s e^eps, injectively, so this bounds dimension(p, r, m).
    """
    require_prime(p)
    require_nonnegative(r, "r")
    require_nonnegative(m, "m")
    if r == 0:
        return 1 if m == 0 else 0
    unit = _degree_unit(p)
    total = 0
    for bocksteins in range(0, r + 1 if p != 2 else 1):
        shifted = m + r + bocksteins
        if shifted % unit:
            continue
        degree = shifted // unit
        total += comb(r, bocksteins) * comb(degree + r - 1, r - 1)
    return total
