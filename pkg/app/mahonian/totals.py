"""
Inversion totals A_n = sum over S_n of inv, B_n = sum over B_n of inv_B,
and the Knuth-Netto formula for i(n, k) with k <= n.
"""
from __future__ import annotations

import math

from django.db.models import TextChoices

from core.exceptions import RangeViolationError

from .triangles import TriangleKind, _check_n, row_product


class TotalsMethod(TextChoices):
    CLOSED_FORM = "closed_form", "Closed form"
    RECURRENCE = "recurrence", "Recurrence"
    MOMENT = "moment", "Moment of the triangle row"


def _closed_form(kind: str, n: int) -> int:
    if kind == TriangleKind.A:
        return math.factorial(n) * math.comb(n, 2) // 2
    return 2 ** (n - 1) * n * n * math.factorial(n)


def _recurrence(kind: str, n: int) -> int:
    if kind == TriangleKind.A:
        # A_1 = 0, A_m = m!(m-1)/2 + m A_{m-1}
        total = 0
        for m in range(2, n + 1):
            total = math.factorial(m) * (m - 1) // 2 + m * total
        return total
    # B_1 = 1, B_m = 2^{m-1} m! (2m-1) + 2m B_{m-1}
    total = 1
    for m in range(2, n + 1):
        total = 2 ** (m - 1) * math.factorial(m) * (2 * m - 1) + 2 * m * total
    return total


def total_inversions(kind: str, n: int, method: str = TotalsMethod.CLOSED_FORM) -> int:
    _check_n(n)
    kind = TriangleKind(kind)
    method = TotalsMethod(method)
    if method == TotalsMethod.CLOSED_FORM:
        return _closed_form(kind, n)
    if method == TotalsMethod.RECURRENCE:
        return _recurrence(kind, n)
    return row_product(kind, n).total


def _binom(top: int, bottom: int) -> int:
    if bottom < 0 or top < 0:
        return 0
    return math.comb(top, bottom)


def pentagonal(j: int) -> int:
    return j * (3 * j - 1) // 2


def knuth_netto(n: int, k: int) -> int:
    """
    i(n,k) = C(n+k-1, k)
             + sum_{j>=1} (-1)^j C(n+k-u_j-j-1, k-u_j-j)
             + sum_{j>=1} (-1)^j C(n+k-u_j-1, k-u_j),     u_j = j(3j-1)/2,

    valid for 0 <= k <= n. Both sums stop once the lower index goes negative.
    """
    _check_n(n)
    if not 0 <= k <= n:
        raise RangeViolationError(f"Knuth-Netto needs 0 <= k <= n, got n={n}, k={k}")

    total = _binom(n + k - 1, k)
    j = 1
    while k - pentagonal(j) >= 0:
        u = pentagonal(j)
        sign = -1 if j % 2 else 1
        total += sign * _binom(n + k - u - j - 1, k - u - j)
        total += sign * _binom(n + k - u - 1, k - u)
        j += 1
    return total
