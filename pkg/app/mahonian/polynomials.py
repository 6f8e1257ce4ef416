# Dense integer polynomials: a list of coefficients, constant term first.
from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence


def multiply(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def geometric(length: int) -> list[int]:
    """1 + q + ... + q^(length-1)."""
    return [1] * length


def product(factors: Iterable[Sequence[int]]) -> list[int]:
    return reduce(multiply, factors, [1])
