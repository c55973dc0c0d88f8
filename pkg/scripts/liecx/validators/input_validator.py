from typing import Iterable, Sequence, Tuple

from sympy import isprime

from liecx.errors import InvalidInputError


def require_prime(p: int) -> int:
    """Check that p is a prime number"""
    if isinstance(p, bool) or not isinstance(p, int) or not isprime(p):
        raise InvalidInputError(f"p must be a prime, got {p!r}")
    return p


def require_nonnegative(value: int, name: str) -> int:
    """Check that value is an integer >= 0"""
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InvalidInputError(f"{name} must be a nonnegative integer, got {value!r}")
    return value


def require_positive(value: int, name: str) -> int:
    """Check that value is an integer >= 1"""
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InvalidInputError(f"{name} must be a positive integer, got {value!r}")
    return value


def require_composition(parts: Iterable[int], total: int = None) -> Tuple[int, ...]:
    """Check that parts is a nonempty composition, optionally of a given total"""
    parts = tuple(parts)
    if not parts:
        raise InvalidInputError("composition must have at least one part")
    for part in parts:
        if isinstance(part, bool) or not isinstance(part, int) or part < 1:
            raise InvalidInputError(f"composition parts must be positive integers, got {parts}")
    if total is not None and sum(parts) != total:
        raise InvalidInputError(f"composition {parts} does not sum to {total}")
    return parts


def require_permutation(images: Sequence[int], n: int) -> Tuple[int, ...]:
    """Check that images lists sigma(1), ..., sigma(n) for a permutation of {1..n}"""
    images = tuple(images)
    if len(images) != n or sorted(images) != list(range(1, n + 1)):
        raise InvalidInputError(f"{images} is not a permutation of 1..{n}")
    return images
