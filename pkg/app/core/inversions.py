"""
Type-B inversion table and inv_B.

For w = beta * prod t_k^{r_k} and p = n + 1 - i:

    inv_i(w) = inv_i(beta)                                   if r_p = 0
    inv_i(w) = 1 + 2 |{j < p : beta_j < beta_p}| + inv_i(beta)  if r_p = 1

with inv_i(beta) = |{j < p : beta_j > beta_p}|. Writing c for the number of
earlier absolute values below beta_p, a positive entry contributes p-1-c and
a negative one p+c, so the digit for position p ranges over [0, 2p-1].
"""
from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass
from typing import Sequence

from .exceptions import DigitOutOfRangeError, LengthMismatchError
from .permutations import SignedPermutation


@dataclass(frozen=True, slots=True)
class InversionTable:
    """(inv_1 : ... : inv_n); inv_1 belongs to the last window position."""

    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        validate_digits(len(self.digits), self.digits)

    @property
    def n(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return "(" + ":".join(str(d) for d in self.digits) + ")"


def digit_bound(i: int, n: int) -> int:
    """Largest admissible value of inv_i in B_n."""
    return 2 * (n - i) + 1


def validate_digits(n: int, digits: Sequence[int]) -> None:
    if len(digits) != n:
        raise LengthMismatchError(f"expected {n} digits, got {len(digits)}")
    for i, d in enumerate(digits, start=1):
        if not 0 <= d <= digit_bound(i, n):
            raise DigitOutOfRangeError(
                f"inv_{i} = {d} is outside [0, {digit_bound(i, n)}]"
            )


def position_digits(window: Sequence[int]) -> list[int]:
    """Digits indexed by window position (position 1 first)."""
    seen: list[int] = []
    out = []
    for p, x in enumerate(window, start=1):
        a = abs(x)
        c = bisect_left(seen, a)
        insort(seen, a)
        out.append(p + c if x < 0 else p - 1 - c)
    return out


def inversion_table(w: SignedPermutation) -> InversionTable:
    digits = position_digits(w.window)
    digits.reverse()
    table = object.__new__(InversionTable)
    object.__setattr__(table, "digits", tuple(digits))
    return table


def inv_b(w: SignedPermutation) -> int:
    return sum(position_digits(w.window))
