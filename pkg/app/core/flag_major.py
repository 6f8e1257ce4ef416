"""
Flag-major index through the gamma generators.

gamma_0 = t_1 and gamma_i = s_i s_{i-1} ... s_1 t_1. On {+-1, ..., +-(i+1)} the
element gamma_i is the 2(i+1)-cycle

    i+1 -> i -> ... -> 1 -> -(i+1) -> ... -> -1 -> i+1

and it fixes everything above i+1. Every w has a unique factorisation
w = gamma_{n-1}^{k_{n-1}} ... gamma_1^{k_1} gamma_0^{k_0} with 0 <= k_i <= 2i+1.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exceptions import DigitOutOfRangeError, IndexOutOfRangeError, LengthMismatchError
from .permutations import SignedPermutation, compose, identity


@dataclass(frozen=True, slots=True)
class GammaExponents:
    exponents: tuple[int, ...]  # (k_0, ..., k_{n-1})

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        for i, k in enumerate(self.exponents):
            if not 0 <= k <= 2 * i + 1:
                raise DigitOutOfRangeError(f"k_{i} = {k} is outside [0, {2 * i + 1}]")

    @property
    def n(self) -> int:
        return len(self.exponents)


def _cycle(m: int) -> list[int]:
    return list(range(m, 0, -1)) + list(range(-m, 0))


def gamma(i: int, n: int) -> SignedPermutation:
    if not 0 <= i <= n - 1:
        raise IndexOutOfRangeError(f"gamma_{i} does not exist in B_{n}")
    cyc = _cycle(i + 1)
    step = {x: cyc[(k + 1) % len(cyc)] for k, x in enumerate(cyc)}
    window = tuple(step[v] if v <= i + 1 else v for v in range(1, n + 1))
    return SignedPermutation._unchecked(window)


def gamma_decompose(w: SignedPermutation) -> GammaExponents:
    window = list(w.window)
    exponents = [0] * w.n
    for m in range(w.n, 0, -1):
        cyc = _cycle(m)
        where = {x: k for k, x in enumerate(cyc)}
        k = where[window[m - 1]]
        exponents[m - 1] = k
        if k:
            # left-multiply by gamma_{m-1}^{-k}: shift every value back k steps
            size = len(cyc)
            window = [cyc[(where[x] - k) % size] for x in window]
        window.pop()
    return GammaExponents(exponents=tuple(exponents))


def gamma_recompose(g: GammaExponents, n: int | None = None) -> SignedPermutation:
    n = g.n if n is None else n
    if n != g.n:
        raise LengthMismatchError(f"expected {n} exponents, got {g.n}")
    result = identity(n)
    for i in range(n - 1, -1, -1):
        result = compose(result, gamma(i, n) ** g.exponents[i])
    return result


def fmaj(w: SignedPermutation) -> int:
    return sum(gamma_decompose(w).exponents)
