"""
Brute-force oracles over the whole of B_n.
"""
from __future__ import annotations

import logging
from collections import deque
from functools import lru_cache
from typing import Optional

from django.conf import settings

from codes.bijection import group_order
from core.exceptions import (
    BadClassIndexError,
    CeilingExceededError,
    RangeViolationError,
    RankTooLargeForOracleError,
)
from core.permutations import (
    SignedPermutation,
    compose,
    identity,
    sign_change,
    simple_transposition,
)
from core.reports import VerificationReport, run_check
from mahonian.triangles import TriangleKind, TriangleRow

from .engine import ProgressCallback, Tally, histogram

logger = logging.getLogger(__name__)

CAYLEY_ORACLE_MAX_N = 4


def enumeration_ceiling(override: Optional[int] = None) -> int:
    if override is not None:
        return override
    return getattr(settings, "ENUMERATION_CEILING", 9)


def _check_ceiling(n: int, ceiling: Optional[int]) -> None:
    limit = enumeration_ceiling(ceiling)
    if n < 1:
        raise RangeViolationError(f"n must be >= 1, got {n}")
    if n > limit:
        raise CeilingExceededError(f"n={n} exceeds the enumeration ceiling {limit}")


def _as_row(n: int, tally: Tally) -> TriangleRow:
    return TriangleRow(kind=TriangleKind.B, n=n, coeffs=tuple(tally.counts))


def histogram_brute(
    n: int,
    *,
    jobs: Optional[int] = None,
    progress: Optional[ProgressCallback] = None,
    ceiling: Optional[int] = None,
) -> TriangleRow:
    _check_ceiling(n, ceiling)
    return _as_row(n, histogram(n, "inv", jobs=jobs, progress=progress))


def total_brute(
    n: int,
    *,
    jobs: Optional[int] = None,
    progress: Optional[ProgressCallback] = None,
    ceiling: Optional[int] = None,
) -> int:
    _check_ceiling(n, ceiling)
    return histogram(n, "inv", jobs=jobs, progress=progress).total


def fmaj_histogram(
    n: int,
    *,
    jobs: Optional[int] = None,
    progress: Optional[ProgressCallback] = None,
    ceiling: Optional[int] = None,
) -> TriangleRow:
    _check_ceiling(n, ceiling)
    return _as_row(n, histogram(n, "fmaj", jobs=jobs, progress=progress))


def class_shift(n: int, j: int) -> int:
    """inv_B(sigma) - inv_B(tau) for sigma in C_j."""
    return n - j if j > 0 else n - j - 1


def class_histogram(
    n: int,
    j: int,
    *,
    jobs: Optional[int] = None,
    ceiling: Optional[int] = None,
) -> list[int]:
    """
    inv_B histogram over C_j = {w : w(n) = j}. C_j is exactly the block of
    ranks whose leading digit inv_1 equals class_shift(n, j).
    """
    _check_ceiling(n, ceiling)
    if j == 0 or abs(j) > n:
        raise BadClassIndexError(f"class index {j} is outside <{n}>")

    block = group_order(n) // (2 * n)
    lo = class_shift(n, j) * block
    tally = histogram(n, "inv", lo=lo, hi=lo + block, last_entry=j, jobs=jobs)
    return tally.counts


# -------------------------
# Cayley graph oracle
# -------------------------
@lru_cache(maxsize=None)
def _cayley_distances(n: int) -> dict[tuple[int, ...], int]:
    gens = [sign_change(1, n)] + [simple_transposition(i, n) for i in range(1, n)]
    start = identity(n)
    dist = {start.window: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        d = dist[w.window]
        for g in gens:
            nxt = compose(w, g)
            if nxt.window not in dist:
                dist[nxt.window] = d + 1
                queue.append(nxt)
    logger.debug("Cayley graph of B_%d: %d vertices", n, len(dist))
    return dist


def cayley_length(w: SignedPermutation) -> int:
    """Word length of w over S = {t_1, s_1, ..., s_{n-1}} by breadth-first search."""
    if w.n > CAYLEY_ORACLE_MAX_N:
        raise RankTooLargeForOracleError(
            f"Cayley oracle is limited to n <= {CAYLEY_ORACLE_MAX_N}, got n={w.n}"
        )
    return _cayley_distances(w.n)[w.window]


# -------------------------
# Presentation relations
# -------------------------
def _relation_instances(n: int):
    e = identity(n)
    s = {i: simple_transposition(i, n) for i in range(1, n)}
    t = {i: sign_change(i, n) for i in range(1, n + 1)}

    for i in s:
        yield f"s_{i}^2 = e", s[i] ** 2, e
    for i in range(1, n - 1):
        yield f"(s_{i} s_{i + 1})^3 = e", (s[i] * s[i + 1]) ** 3, e
    for i in s:
        for j in s:
            if abs(i - j) > 1:
                yield f"(s_{i} s_{j})^2 = e", (s[i] * s[j]) ** 2, e
    for i in t:
        yield f"t_{i}^2 = e", t[i] ** 2, e
    yield "(t_1 s_1)^4 = e", (t[1] * s[1]) ** 4, e
    for i in t:
        for j in t:
            if i < j:
                yield f"t_{i} t_{j} = t_{j} t_{i}", t[i] * t[j], t[j] * t[i]
    for i in s:
        yield f"s_{i} t_{i} s_{i} = t_{i + 1}", s[i] * t[i] * s[i], t[i + 1]
    for i in s:
        for j in t:
            if j not in (i, i + 1):
                yield f"s_{i} t_{j} = t_{j} s_{i}", s[i] * t[j], t[j] * s[i]


def verify_relations(n: int) -> VerificationReport:
    if not 2 <= n <= 8:
        raise RangeViolationError(f"relations are checked for 2 <= n <= 8, got n={n}")

    checked = 0

    def body() -> str | None:
        nonlocal checked
        for name, lhs, rhs in _relation_instances(n):
            checked += 1
            if lhs != rhs:
                return f"{name}: {lhs} != {rhs}"
        return None

    report = run_check("relations", {"n": n}, body)
    logger.debug("checked %d relation instances in B_%d", checked, n)
    return report
