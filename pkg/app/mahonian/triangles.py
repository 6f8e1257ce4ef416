"""
Mahonian triangles i(n, k) (type A) and i_B(n, k) (type B).

Every method here is exact; rows are tuples of Python ints.
"""
from __future__ import annotations

import logging
import math
import threading
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate

from django.db.models import TextChoices

from core.exceptions import RangeViolationError

from .polynomials import geometric, product

logger = logging.getLogger(__name__)


class TriangleKind(TextChoices):
    A = "a", "Type A"
    B = "b", "Type B"


def top_degree(kind: str, n: int) -> int:
    return n * (n - 1) // 2 if kind == TriangleKind.A else n * n


def group_size(kind: str, n: int) -> int:
    return math.factorial(n) if kind == TriangleKind.A else 2**n * math.factorial(n)


@dataclass(frozen=True, slots=True)
class TriangleRow:
    kind: str
    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        expected = top_degree(self.kind, self.n) + 1
        if len(self.coeffs) != expected:
            raise ValueError(f"row {self.kind}{self.n} needs {expected} coefficients, got {len(self.coeffs)}")

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    @property
    def total(self) -> int:
        """Sum of k * coeffs[k]: total inversions over the group."""
        return sum(k * c for k, c in enumerate(self.coeffs))


def _check_n(n: int) -> None:
    if n < 1:
        raise RangeViolationError(f"n must be >= 1, got {n}")


# -------------------------
# Polynomial product
# -------------------------
@lru_cache(maxsize=256)
def row_product(kind: str, n: int) -> TriangleRow:
    """
    Type A: (1)(1+q)...(1+...+q^{n-1}).
    Type B: (1+q)(1+q+q^2+q^3)...(1+...+q^{2n-1}).
    """
    _check_n(n)
    kind = TriangleKind(kind)
    if kind == TriangleKind.A:
        factors = (geometric(i) for i in range(1, n + 1))
    else:
        factors = (geometric(2 * i) for i in range(1, n + 1))
    return TriangleRow(kind=kind, n=n, coeffs=tuple(product(factors)))


# -------------------------
# Longitudinal recurrences
# -------------------------
_rows_lock = threading.Lock()
_recurrence_rows: dict[str, tuple[tuple[int, ...], ...]] = {
    TriangleKind.A: ((1,),),
    TriangleKind.B: ((1, 1),),
}


def _recurrence_step(kind: str, n: int, prev: tuple[int, ...]) -> tuple[int, ...]:
    prefix = [0, *accumulate(prev)]
    prev_top = len(prev) - 1
    # window of previous-row indices summed for entry k: [k - width + 1, k]
    width = n if kind == TriangleKind.A else 2 * n
    row = []
    for k in range(top_degree(kind, n) + 1):
        lo = max(0, k - width + 1)
        hi = min(k, prev_top)
        row.append(prefix[hi + 1] - prefix[lo] if lo <= hi else 0)
    return tuple(row)


def row_recurrence(kind: str, n: int) -> TriangleRow:
    """
    Type A: i(n,k) = sum_{j=max(0,k-n+1)}^{min(k,C(n-1,2))} i(n-1,j).
    Type B: i_B(n,k) = sum_{i=max(0,k-2n+1)}^{min(k,(n-1)^2)} i_B(n-1,i).

    Rows are memoised per kind in a tuple that is only ever replaced, never
    mutated, so readers need no lock.
    """
    _check_n(n)
    kind = TriangleKind(kind)
    rows = _recurrence_rows[kind]
    if n > len(rows):
        with _rows_lock:
            rows = _recurrence_rows[kind]
            extended = list(rows)
            while len(extended) < n:
                extended.append(_recurrence_step(kind, len(extended) + 1, extended[-1]))
            rows = tuple(extended)
            _recurrence_rows[kind] = rows
            logger.debug("recurrence cache for type %s extended to n=%d", kind, len(rows))
    return TriangleRow(kind=kind, n=n, coeffs=rows[n - 1])


def row_sliding(n: int) -> TriangleRow:
    """i_B(n,k) = sum_{i=0}^{2n-1} i_B(n-1, k-i), out-of-range terms zero."""
    _check_n(n)
    row: tuple[int, ...] = (1, 1)
    for m in range(2, n + 1):
        prev = row
        row = tuple(
            sum(prev[k - i] for i in range(2 * m) if 0 <= k - i < len(prev))
            for k in range(m * m + 1)
        )
    return TriangleRow(kind=TriangleKind.B, n=n, coeffs=row)


def entry(kind: str, n: int, k: int) -> int:
    """Triangle value; 0 whenever k lies outside [0, top_degree]."""
    if k < 0 or k > top_degree(kind, n):
        return 0
    return row_product(kind, n).coeffs[k]


def balls_in_boxes(n: int, k: int) -> int:
    """
    Ways to put k balls into n boxes when box j holds at most 2(n-j)+1 balls.
    """
    _check_n(n)
    if k < 0:
        return 0
    ways = [1] + [0] * k
    for j in range(1, n + 1):
        cap = 2 * (n - j) + 1
        prefix = [0, *accumulate(ways)]
        ways = [prefix[s + 1] - prefix[max(0, s - cap)] for s in range(k + 1)]
    return ways[k]
