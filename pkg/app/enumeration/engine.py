"""
Partitioned, parallel histogram over rank space.

Rank space [lo, hi) is cut into contiguous chunks (workers x chunks-per-worker).
Each chunk is tallied by a worker into a private histogram; results come back
in chunk order and are summed exactly, so the outcome does not depend on the
number of workers, the partition, or scheduling.
"""
from __future__ import annotations

import logging
import multiprocessing as mp
from dataclasses import dataclass
from typing import Callable, Optional

from django.conf import settings

from codes.bijection import group_order
from core.flag_major import gamma_decompose
from core.inversions import position_digits
from core.permutations import SignedPermutation

from .stream import check_rank_interval, iter_windows

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[int, int], None]

STATISTICS = ("inv", "fmaj")


def _inv(window: tuple[int, ...]) -> int:
    return sum(position_digits(window))


def _fmaj(window: tuple[int, ...]) -> int:
    return sum(gamma_decompose(SignedPermutation._unchecked(window)).exponents)


_STAT_FUNCS = {"inv": _inv, "fmaj": _fmaj}


@dataclass(frozen=True)
class Chunk:
    n: int
    lo: int
    hi: int
    statistic: str = "inv"
    last_entry: Optional[int] = None  # only count windows with w(n) == last_entry


@dataclass
class Tally:
    counts: list[int]
    total: int = 0  # sum of the statistic over counted elements
    size: int = 0  # number of counted elements

    def merge(self, other: "Tally") -> "Tally":
        if len(other.counts) > len(self.counts):
            self.counts.extend([0] * (len(other.counts) - len(self.counts)))
        for k, c in enumerate(other.counts):
            self.counts[k] += c
        self.total += other.total
        self.size += other.size
        return self


def tally_chunk(chunk: Chunk) -> Tally:
    stat = _STAT_FUNCS[chunk.statistic]
    counts = [0] * (chunk.n * chunk.n + 1)
    total = 0
    size = 0
    want = chunk.last_entry
    for window in iter_windows(chunk.n, chunk.lo, chunk.hi):
        if want is not None and window[-1] != want:
            continue
        v = stat(window)
        counts[v] += 1
        total += v
        size += 1
    return Tally(counts=counts, total=total, size=size)


def partition(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Split [lo, hi) into at most `parts` contiguous, non-empty intervals."""
    span = hi - lo
    parts = max(1, min(parts, span)) if span else 1
    bounds = [lo + (span * i) // parts for i in range(parts + 1)]
    return [(a, b) for a, b in zip(bounds, bounds[1:]) if a < b]


class ProgressReporter:
    def __init__(self, total: int, callback: Optional[ProgressCallback], stride: int):
        self.total = total
        self.callback = callback
        self.stride = max(1, stride)
        self.done = 0
        self._last = 0

    def advance(self, k: int) -> None:
        self.done += k
        if self.callback is None:
            return
        if self.done - self._last >= self.stride or self.done == self.total:
            self._last = self.done
            self.callback(self.done, self.total)


def histogram(
    n: int,
    statistic: str = "inv",
    *,
    lo: int = 0,
    hi: Optional[int] = None,
    last_entry: Optional[int] = None,
    jobs: Optional[int] = None,
    chunks_per_worker: Optional[int] = None,
    parts: Optional[int] = None,
    progress: Optional[ProgressCallback] = None,
) -> Tally:
    if statistic not in _STAT_FUNCS:
        raise ValueError(f"unknown statistic {statistic!r}; expected one of {STATISTICS}")
    hi = group_order(n) if hi is None else hi
    check_rank_interval(n, lo, hi)

    jobs = jobs or getattr(settings, "ENUMERATION_JOBS", 1)
    chunks_per_worker = chunks_per_worker or getattr(settings, "ENUMERATION_CHUNKS_PER_WORKER", 8)
    stride = getattr(settings, "ENUMERATION_PROGRESS_STRIDE", 1_000_000)

    plan = partition(lo, hi, parts or jobs * chunks_per_worker)
    chunks = [Chunk(n=n, lo=a, hi=b, statistic=statistic, last_entry=last_entry) for a, b in plan]
    logger.debug("B_%d %s histogram over [%d, %d): %d chunks, %d jobs", n, statistic, lo, hi, len(chunks), jobs)

    reporter = ProgressReporter(hi - lo, progress, stride)
    result = Tally(counts=[0] * (n * n + 1))

    if jobs <= 1:
        for chunk in chunks:
            result.merge(tally_chunk(chunk))
            reporter.advance(chunk.hi - chunk.lo)
    else:
        with mp.Pool(processes=jobs) as pool:
            for chunk, part in zip(chunks, pool.imap(tally_chunk, chunks)):
                result.merge(part)
                reporter.advance(chunk.hi - chunk.lo)

    logger.info("B_%d %s histogram done: %d elements", n, statistic, result.size)
    return result
