"""
The bijection B_n <-> T_{2,n} = [0,2n-1] x [0,2n-3] x ... x [0,1] and its
mixed-radix linearisation onto [0, 2^n n!).

Rank order: inv_1 is the most significant digit, place values are the
radices (2n, 2n-2, ..., 2).
"""
from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from typing import Sequence

from core.exceptions import RankOutOfRangeError, WindowParseError
from core.inversions import InversionTable, digit_bound, inversion_table, validate_digits
from core.permutations import SignedPermutation

logger = logging.getLogger(__name__)

_TABLE_RE = re.compile(r"^\(\s*(\d+(?:\s*:\s*\d+)*)\s*\)$")


@dataclass(frozen=True, slots=True)
class RadixBounds:
    n: int
    bounds: tuple[int, ...]

    @property
    def radices(self) -> tuple[int, ...]:
        return tuple(b + 1 for b in self.bounds)


def radix_bounds(n: int) -> RadixBounds:
    return RadixBounds(n=n, bounds=tuple(digit_bound(i, n) for i in range(1, n + 1)))


def group_order(n: int) -> int:
    return 2**n * math.factorial(n)


def encode(w: SignedPermutation) -> InversionTable:
    return inversion_table(w)


def decode_digits(digits: Sequence[int]) -> tuple[int, ...]:
    """Window for an already validated digit tuple (inv_1, ..., inv_n)."""
    n = len(digits)
    free = list(range(1, n + 1))
    window = [0] * n
    for p in range(n, 0, -1):
        d = digits[n - p]
        if d < p:
            window[p - 1] = free.pop(p - 1 - d)
        else:
            window[p - 1] = -free.pop(d - p)
    return tuple(window)


def decode(t: InversionTable) -> SignedPermutation:
    validate_digits(t.n, t.digits)
    return SignedPermutation._unchecked(decode_digits(t.digits))


def rank_digits(digits: Sequence[int]) -> int:
    n = len(digits)
    r = 0
    for i, d in enumerate(digits, start=1):
        r = r * (2 * (n - i) + 2) + d
    return r


def unrank_digits(r: int, n: int) -> list[int]:
    if not 0 <= r < group_order(n):
        raise RankOutOfRangeError(f"rank {r} is outside [0, {group_order(n)})")
    digits = [0] * n
    for i in range(n, 0, -1):
        r, digits[i - 1] = divmod(r, 2 * (n - i) + 2)
    return digits


def rank(w: SignedPermutation) -> int:
    return rank_digits(encode(w).digits)


def unrank(r: int, n: int) -> SignedPermutation:
    return SignedPermutation._unchecked(decode_digits(unrank_digits(r, n)))


def format_table(t: InversionTable) -> str:
    return str(t)


def parse_table(text: str) -> InversionTable:
    m = _TABLE_RE.match((text or "").strip())
    if not m:
        raise WindowParseError(f"invalid inversion table {text!r}", token=text or "")
    return InversionTable(digits=tuple(int(d) for d in m.group(1).split(":")))
