"""
Error types raised by the signed-permutation kernel.

Everything derives from HyperoctahedralError so callers (management commands,
serializers) can catch the whole family in one place.
"""
from __future__ import annotations


class HyperoctahedralError(ValueError):
    """Base class for every domain error in this project."""


# Window validation
class ZeroEntryError(HyperoctahedralError):
    pass


class NotAPermutationError(HyperoctahedralError):
    pass


class LengthMismatchError(HyperoctahedralError):
    pass


class WindowParseError(HyperoctahedralError):
    def __init__(self, message: str, token: str = ""):
        super().__init__(message)
        self.token = token


# Group arithmetic
class RankMismatchError(HyperoctahedralError):
    """Two operands live in groups of different rank n."""


class RankTooSmallError(HyperoctahedralError):
    pass


class IndexOutOfRangeError(HyperoctahedralError):
    pass


# Codes
class DigitOutOfRangeError(HyperoctahedralError):
    pass


class RankOutOfRangeError(HyperoctahedralError):
    """A mixed-radix rank outside [0, 2^n n!)."""


# Triangles
class RangeViolationError(HyperoctahedralError):
    pass


# Enumeration
class CeilingExceededError(HyperoctahedralError):
    pass


class BadClassIndexError(HyperoctahedralError):
    pass


class RankTooLargeForOracleError(HyperoctahedralError):
    pass
