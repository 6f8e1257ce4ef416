"""
Truncated formal power series with exact integer coefficients, and the
diagonal identity S_j(x) = (x C(x))^j S_0(x) where S_j(x) = sum_n i(n, n-j) x^n.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from core.reports import VerificationReport, mismatch, run_check

from .triangles import TriangleKind, entry


@dataclass(frozen=True, slots=True)
class Series:
    """Coefficients of x^0..x^order; everything above order is unknown."""

    coeffs: tuple[int, ...]
    order: int

    @classmethod
    def of(cls, coeffs: Iterable[int], order: int) -> "Series":
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        c = list(coeffs)[: order + 1]
        c.extend([0] * (order + 1 - len(c)))
        return cls(coeffs=tuple(c), order=order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.of([1], order)

    def truncate(self, order: int) -> "Series":
        return Series.of(self.coeffs, min(order, self.order))

    def shift(self, m: int) -> "Series":
        """Multiply by x^m."""
        return Series.of([0] * m + list(self.coeffs), self.order)

    def __add__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        return Series.of((a + b for a, b in zip(self.coeffs, other.coeffs)), order)

    def __mul__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(order + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return Series(coeffs=tuple(out), order=order)

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = Series.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def catalan_series(order: int) -> Series:
    return Series.of((catalan(n) for n in range(order + 1)), order)


def diagonal_series(j: int, order: int) -> Series:
    """S_j(x) truncated at x^order, with i(0, 0) = 1."""
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")

    def coeff(n: int) -> int:
        if n == 0:
            return 1 if j == 0 else 0
        return entry(TriangleKind.A, n, n - j)

    return Series.of((coeff(n) for n in range(order + 1)), order)


def verify_gf_identity(j: int, order: int) -> VerificationReport:
    def body() -> str | None:
        lhs = diagonal_series(j, order)
        rhs = catalan_series(order).shift(1) ** j * diagonal_series(0, order)
        for n, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
            if a != b:
                return mismatch(f"coefficient of x^{n}", b, a)
        return None

    return run_check("gf", {"j": j, "order": order}, body)
