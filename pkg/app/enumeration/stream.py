"""
Rank-ordered enumeration of B_n.

The digit tuple (inv_1, ..., inv_n) is stepped like an odometer, least
significant digit (inv_n, window position 1) first. When the low t digits
change, only window positions 1..t are rebuilt, from the absolute values
those positions already hold.
"""
from __future__ import annotations

from typing import Iterator

from codes.bijection import decode_digits, group_order, unrank_digits
from core.exceptions import RankOutOfRangeError
from core.permutations import SignedPermutation


def check_rank_interval(n: int, lo: int, hi: int) -> None:
    order = group_order(n)
    if not 0 <= lo <= hi <= order:
        raise RankOutOfRangeError(f"[{lo}, {hi}) is not inside [0, {order}]")


def iter_windows(n: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    check_rank_interval(n, lo, hi)
    if lo == hi:
        return

    digits = unrank_digits(lo, n)
    window = list(decode_digits(digits))
    radices = [2 * (n - i) + 2 for i in range(1, n + 1)]

    remaining = hi - lo
    while True:
        yield tuple(window)
        remaining -= 1
        if not remaining:
            return

        idx = n - 1
        while True:
            digits[idx] += 1
            if digits[idx] < radices[idx]:
                break
            digits[idx] = 0
            idx -= 1

        # digits[idx:] changed: they govern window positions n-idx .. 1
        t = n - idx
        free = sorted(abs(x) for x in window[:t])
        for p in range(t, 0, -1):
            d = digits[n - p]
            if d < p:
                window[p - 1] = free.pop(p - 1 - d)
            else:
                window[p - 1] = -free.pop(d - p)


def stream(n: int, lo: int, hi: int) -> Iterator[SignedPermutation]:
    for window in iter_windows(n, lo, hi):
        yield SignedPermutation._unchecked(window)
