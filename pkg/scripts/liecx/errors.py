from typing import Any, Optional


class LiecxError(Exception):
    """Base class for every error raised by liecx"""
    exit_code = 1


class InvalidInputError(LiecxError, ValueError):
    """An argument is malformed or outside its domain"""
    exit_code = 2


class InsufficientDataError(InvalidInputError):
    """A series is too short for the requested estimate"""


class CapacityError(LiecxError):
    """A configured resource limit was exceeded

    `partial` holds whatever was computed before the limit was hit, if anything.
    """
    exit_code = 3

    def __init__(self, message: str, partial: Optional[Any] = None):
        super().__init__(message)
        self.partial = partial


class OracleError(LiecxError):
    """An internal consistency check of the homology oracle failed"""
