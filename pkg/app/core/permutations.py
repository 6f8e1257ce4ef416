"""
Signed permutations of B_n in window (one-line) notation.

A SignedPermutation stores only w(1), ..., w(n); the action on negatives,
w(-i) = -w(i), is always derived. Composition is function application:
(u * v)(i) = u(v(i)).
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exceptions import (
    IndexOutOfRangeError,
    LengthMismatchError,
    NotAPermutationError,
    RankMismatchError,
    RankTooSmallError,
    WindowParseError,
    ZeroEntryError,
)

logger = logging.getLogger(__name__)

_TOKEN_RE = re.compile(r"^-?[1-9][0-9]*$")


def _sign(x: int) -> int:
    return -1 if x < 0 else 1


@dataclass(frozen=True, slots=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "window", tuple(self.window))
        _validate_window(len(self.window), self.window)

    @classmethod
    def _unchecked(cls, window: tuple[int, ...]) -> "SignedPermutation":
        # Hot-path constructor for windows produced by our own decoders.
        obj = object.__new__(cls)
        object.__setattr__(obj, "window", window)
        return obj

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i == 0 or abs(i) > self.n:
            raise IndexOutOfRangeError(f"{i} is outside <{self.n}>")
        if i < 0:
            return -self.window[-i - 1]
        return self.window[i - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "SignedPermutation":
        base = self if k >= 0 else inverse(self)
        result = identity(self.n)
        for _ in range(abs(k)):
            result = compose(result, base)
        return result

    def __str__(self) -> str:
        return format_window(self)


@dataclass(frozen=True, slots=True)
class Decomposition:
    """w = beta * t_1^{r_1} ... t_n^{r_n}, i.e. w(k) = (-1)^{r_k} beta(k)."""

    beta: tuple[int, ...]
    signs: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class TypeAStatistics:
    inv: int
    descents: frozenset[int]
    maj: int


def _require_rank(n: int) -> None:
    if n < 1:
        raise RankTooSmallError(f"B_n needs n >= 1, got {n}")


def _validate_window(n: int, entries: Sequence[int]) -> None:
    _require_rank(n)
    if len(entries) != n:
        raise LengthMismatchError(f"expected {n} entries, got {len(entries)}")
    for pos, x in enumerate(entries, start=1):
        if x == 0:
            raise ZeroEntryError(f"entry at position {pos} is 0")
    if sorted(abs(x) for x in entries) != list(range(1, n + 1)):
        raise NotAPermutationError(
            f"absolute values {sorted(abs(x) for x in entries)} are not 1..{n}"
        )


def from_window(n: int, entries: Iterable[int]) -> SignedPermutation:
    entries = tuple(int(x) for x in entries)
    _validate_window(n, entries)
    return SignedPermutation._unchecked(entries)


def parse_window(text: str) -> SignedPermutation:
    """
    Parse "7 3 -2 8 -6 -4 -1 5" into a SignedPermutation.
    Entries are base-10 integers separated by whitespace; "0" and "-0" are rejected.
    """
    raw = (text or "").strip().replace("−", "-")
    if not raw:
        raise WindowParseError("empty window", token="")
    tokens = raw.split()
    entries = []
    for tok in tokens:
        if not _TOKEN_RE.match(tok):
            raise WindowParseError(f"invalid window entry {tok!r}", token=tok)
        entries.append(int(tok))
    return from_window(len(entries), entries)


def format_window(w: SignedPermutation) -> str:
    return " ".join(str(x) for x in w.window)


# -------------------------
# Distinguished elements
# -------------------------
def identity(n: int) -> SignedPermutation:
    _require_rank(n)
    return SignedPermutation._unchecked(tuple(range(1, n + 1)))


def longest_element(n: int) -> SignedPermutation:
    _require_rank(n)
    return SignedPermutation._unchecked(tuple(-i for i in range(1, n + 1)))


def simple_transposition(i: int, n: int) -> SignedPermutation:
    """s_i swaps i and i+1."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRangeError(f"s_{i} does not exist in B_{n}")
    window = list(range(1, n + 1))
    window[i - 1], window[i] = window[i], window[i - 1]
    return SignedPermutation._unchecked(tuple(window))


def sign_change(i: int, n: int) -> SignedPermutation:
    """t_i sends i to -i and fixes everything else."""
    if not 1 <= i <= n:
        raise IndexOutOfRangeError(f"t_{i} does not exist in B_{n}")
    window = list(range(1, n + 1))
    window[i - 1] = -i
    return SignedPermutation._unchecked(tuple(window))


# -------------------------
# Group operations
# -------------------------
def compose(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    if u.n != v.n:
        raise RankMismatchError(f"cannot compose B_{u.n} with B_{v.n}")
    uw = u.window
    return SignedPermutation._unchecked(
        tuple(uw[x - 1] if x > 0 else -uw[-x - 1] for x in v.window)
    )


def inverse(w: SignedPermutation) -> SignedPermutation:
    out = [0] * w.n
    for i, x in enumerate(w.window, start=1):
        out[abs(x) - 1] = _sign(x) * i
    return SignedPermutation._unchecked(tuple(out))


def decompose(w: SignedPermutation) -> Decomposition:
    return Decomposition(
        beta=tuple(abs(x) for x in w.window),
        signs=tuple(1 if x < 0 else 0 for x in w.window),
    )


def recompose(d: Decomposition) -> SignedPermutation:
    if len(d.beta) != len(d.signs):
        raise LengthMismatchError("beta and signs differ in length")
    return from_window(len(d.beta), (-b if r else b for b, r in zip(d.beta, d.signs)))


def backward(w: SignedPermutation) -> SignedPermutation:
    return SignedPermutation._unchecked(w.window[::-1])


def neg_sum(w: SignedPermutation) -> int:
    return sum(-x for x in w.window if x < 0)


# -------------------------
# Type-A statistics
# -------------------------
def type_a_stats(beta: Sequence[int]) -> TypeAStatistics:
    beta = tuple(beta)
    if sorted(beta) != list(range(1, len(beta) + 1)):
        raise NotAPermutationError(f"{beta} is not a permutation of 1..{len(beta)}")
    inv = sum(1 for i in range(len(beta)) for j in range(i + 1, len(beta)) if beta[i] > beta[j])
    descents = frozenset(i for i in range(1, len(beta)) if beta[i - 1] > beta[i])
    return TypeAStatistics(inv=inv, descents=descents, maj=sum(descents))


# -------------------------
# Classes C_j = {w : w(n) = j}
# -------------------------
def class_index(w: SignedPermutation) -> int:
    return w.window[-1]


def class_reduce(sigma: SignedPermutation) -> tuple[SignedPermutation, int]:
    """
    Split sigma in C_j into (tau, j), tau being sigma restricted to positions
    1..n-1 and relabeled order-preservingly from [n] minus {|j|} onto [n-1].
    """
    n = sigma.n
    if n < 2:
        raise RankTooSmallError("class_reduce needs n >= 2")
    j = sigma.window[-1]
    relabel = {a: i for i, a in enumerate((v for v in range(1, n + 1) if v != abs(j)), start=1)}
    tau = SignedPermutation._unchecked(tuple(_sign(x) * relabel[abs(x)] for x in sigma.window[:-1]))
    return tau, j


def class_lift(tau: SignedPermutation, j: int, n: int) -> SignedPermutation:
    if tau.n != n - 1:
        raise RankMismatchError(f"tau has rank {tau.n}, expected {n - 1}")
    if j == 0 or abs(j) > n:
        raise IndexOutOfRangeError(f"class index {j} is outside <{n}>")
    labels = [v for v in range(1, n + 1) if v != abs(j)]
    return SignedPermutation._unchecked(
        tuple(_sign(x) * labels[abs(x) - 1] for x in tau.window) + (j,)
    )
