"""
Named verification suites behind `manage.py verify` and `/api/verify/`.

Each check runs for one size parameter n and returns a VerificationReport.
Every check declares the n it accepts; brute-force checks are additionally
capped by the enumeration ceiling.
"""
from __future__ import annotations

import itertools
import logging
import math
import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from codes.bijection import decode, encode, group_order, radix_bounds, rank, unrank
from core.exceptions import RangeViolationError
from core.inversions import InversionTable, inv_b, inversion_table
from core.permutations import (
    SignedPermutation,
    backward,
    compose,
    from_window,
    identity,
    longest_element,
    neg_sum,
    parse_window,
)
from core.reports import VerificationReport, mismatch, run_check
from enumeration.engine import ProgressCallback
from enumeration.oracles import (
    cayley_length,
    class_histogram,
    class_shift,
    enumeration_ceiling,
    fmaj_histogram,
    histogram_brute,
    verify_relations,
)
from enumeration.stream import stream
from mahonian.series import diagonal_series, verify_gf_identity
from mahonian.totals import TotalsMethod, knuth_netto, total_inversions
from mahonian.triangles import (
    TriangleKind,
    entry,
    group_size,
    row_product,
    row_recurrence,
    row_sliding,
)

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_N = 6
GF_MAX_J = 4
WORKED_EXAMPLE = "7 3 -2 8 -6 -4 -1 5"


@dataclass(frozen=True)
class CheckContext:
    jobs: Optional[int] = None
    progress: Optional[ProgressCallback] = None
    ceiling: Optional[int] = None
    seed: int = 0
    samples: int = 10_000

    @property
    def limit(self) -> int:
        return enumeration_ceiling(self.ceiling)


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[int, CheckContext], VerificationReport]
    min_n: Optional[int] = None
    max_n: Optional[int] = None
    brute: bool = False  # capped by the enumeration ceiling
    help: str = ""

    def bounds(self, ctx: CheckContext) -> tuple[Optional[int], Optional[int]]:
        hi = self.max_n
        if self.brute:
            hi = ctx.limit if hi is None else min(hi, ctx.limit)
        return self.min_n, hi

    def accepts(self, n: int, ctx: CheckContext) -> bool:
        lo, hi = self.bounds(ctx)
        return (lo is None or n >= lo) and (hi is None or n <= hi)

    def clamp(self, n: int, ctx: CheckContext) -> int:
        lo, hi = self.bounds(ctx)
        if lo is not None:
            n = max(n, lo)
        if hi is not None:
            n = min(n, hi)
        return n


def _compare(label: str, expected: Sequence[int], actual: Sequence[int]) -> str | None:
    for k in range(max(len(expected), len(actual))):
        e = expected[k] if k < len(expected) else 0
        a = actual[k] if k < len(actual) else 0
        if e != a:
            return mismatch(f"{label} k={k}", e, a)
    return None


def _random_window(rng: random.Random, n: int) -> SignedPermutation:
    values = rng.sample(range(1, n + 1), n)
    return from_window(n, (v if rng.random() < 0.5 else -v for v in values))


def _elements(n: int, ctx: CheckContext, rng: random.Random):
    """All of B_n for small n, otherwise ctx.samples random elements."""
    if n <= EXHAUSTIVE_MAX_N:
        return stream(n, 0, group_order(n))
    return (_random_window(rng, n) for _ in range(ctx.samples))


# -------------------------
# Triangle checks
# -------------------------
def check_symmetry(n: int, ctx: CheckContext) -> VerificationReport:
    def body() -> str | None:
        for kind in TriangleKind:
            for m in range(1, n + 1):
                coeffs = row_product(kind, m).coeffs
                top = len(coeffs) - 1
                for k in range(top + 1):
                    if coeffs[k] != coeffs[top - k]:
                        return mismatch(f"{kind.value}({m},{top - k})", coeffs[k], coeffs[top - k])
                if sum(coeffs) != group_size(kind, m):
                    return mismatch(f"row sum {kind.value} n={m}", group_size(kind, m), sum(coeffs))
        # w -> w_0 w sends inv_B = k to n^2 - k
        w0 = longest_element(n)
        for w in _elements(n, ctx, random.Random(ctx.seed)):
            flipped = inv_b(compose(w0, w))
            if flipped != n * n - inv_b(w):
                return mismatch(f"inv_B(w_0 {w})", n * n - inv_b(w), flipped)
        return None

    mode = "exhaustive" if n <= EXHAUSTIVE_MAX_N else "sampled"
    return run_check("symmetry", {"n": n, "mode": mode}, body)


def check_recurrence(n: int, ctx: CheckContext) -> VerificationReport:
    def body() -> str | None:
        for kind in TriangleKind:
            for m in range(1, n + 1):
                failure = _compare(
                    f"{kind.value} n={m}", row_product(kind, m).coeffs, row_recurrence(kind, m).coeffs
                )
                if failure:
                    return failure
        return None

    return run_check("recurrence", {"n": n}, body)


def check_sliding(n: int, ctx: CheckContext) -> VerificationReport:
    def body() -> str | None:
        for m in range(2, n + 1):
            failure = _compare(f"b n={m}", row_product(TriangleKind.B, m).coeffs, row_sliding(m).coeffs)
            if failure:
                return failure
        return None

    return run_check("sliding", {"n": n}, body)


def check_totals(n: int, ctx: CheckContext) -> VerificationReport:
    def body() -> str | None:
        for kind in TriangleKind:
            for m in range(1, n + 1):
                closed = total_inversions(kind, m, TotalsMethod.CLOSED_FORM)
                for method in (TotalsMethod.RECURRENCE, TotalsMethod.MOMENT):
                    value = total_inversions(kind, m, method)
                    if value != closed:
                        return mismatch(f"{kind.value} n={m} {method.value}", closed, value)
        return None

    params = {
        "n": n,
        "total_a": total_inversions(TriangleKind.A, n),
        "total_b": total_inversions(TriangleKind.B, n),
    }
    return run_check("totals", params, body)


def check_knuth_netto(n: int, ctx: CheckContext) -> VerificationReport:
    def body() -> str | None:
        for m in range(1, n + 1):
            for k in range(m + 1):
                expected = entry(TriangleKind.A, m, k)
                value = knuth_netto(m, k)
                if value != expected:
                    return mismatch(f"i({m},{k})", expected, value)
        return None

    return run_check("knuth-netto", {"n": n}, body)


def check_gf(n: int, ctx: CheckContext) -> VerificationReport:
    """n is the truncation order; j runs over 0..4."""

    def body() -> str | None:
        for j in range(GF_MAX_J + 1):
            report = verify_gf_identity(j, n)
            if not report.passed:
                return f"j={j}: {report.first_failure}"
        return None

    return run_check("gf", {"order": n, "j_max": GF_MAX_J}, body)


# -------------------------
# Bijection checks
# -------------------------
def check_bijection(n: int, ctx: CheckContext) -> VerificationReport:
    order = group_order(n)
    bounds = radix_bounds(n).bounds

    def exhaustive() -> str | None:
        seen = set()
        for r, w in enumerate(stream(n, 0, order)):
            t = encode(w)
            if decode(t) != w:
                return mismatch(f"decode(encode({w}))", w, decode(t))
            if rank(w) != r:
                return mismatch(f"rank({w})", r, rank(w))
            seen.add(w.window)
        if len(seen) != order:
            return mismatch(f"|image| n={n}", order, len(seen))
        for digits in itertools.product(*(range(b + 1) for b in bounds)):
            back = encode(decode(InversionTable(digits))).digits
            if back != digits:
                return mismatch(f"encode(decode({digits}))", digits, back)
        return None

    def sampled() -> str | None:
        rng = random.Random(ctx.seed)
        for _ in range(ctx.samples):
            digits = tuple(rng.randint(0, b) for b in bounds)
            back = encode(decode(InversionTable(digits))).digits
            if back != digits:
                return mismatch(f"encode(decode({digits}))", digits, back)
            r = rng.randrange(order)
            if rank(unrank(r, n)) != r:
                return mismatch(f"rank(unrank({r}))", r, rank(unrank(r, n)))
        return None

    mode = "exhaustive" if n <= EXHAUSTIVE_MAX_N else "sampled"
    params = {"n": n, "mode": mode}
    if mode == "sampled":
        params.update(samples=ctx.samples, seed=ctx.seed)
    return run_check("bijection", params, exhaustive if mode == "exhaustive" else sampled)


def check_backward(n: int, ctx: CheckContext) -> VerificationReport:
    """inv_B(w) + inv_B(backward(w)) = C(n,2) + 2 neg_sum(w)."""
    rng = random.Random(ctx.seed)
    base = math.comb(n, 2)

    def body() -> str | None:
        for w in _elements(n, ctx, rng):
            expected = base + 2 * neg_sum(w)
            value = inv_b(w) + inv_b(backward(w))
            if value != expected:
                return mismatch(f"w={w}", expected, value)
        return None

    mode = "exhaustive" if n <= EXHAUSTIVE_MAX_N else "sampled"
    return run_check("backward", {"n": n, "mode": mode}, body)


# -------------------------
# Brute-force checks
# -------------------------
def check_equidist(n: int, ctx: CheckContext) -> VerificationReport:
    def body() -> str | None:
        inv_row = histogram_brute(n, jobs=ctx.jobs, progress=ctx.progress, ceiling=ctx.ceiling)
        failure = _compare("inv vs product", row_product(TriangleKind.B, n).coeffs, inv_row.coeffs)
        if failure:
            return failure
        fmaj_row = fmaj_histogram(n, jobs=ctx.jobs, progress=ctx.progress, ceiling=ctx.ceiling)
        return _compare("fmaj vs inv", inv_row.coeffs, fmaj_row.coeffs)

    return run_check("equidist", {"n": n, "jobs": ctx.jobs or 1}, body)


def check_classes(n: int, ctx: CheckContext) -> VerificationReport:
    size = 2 ** (n - 1) * math.factorial(n - 1)

    def body() -> str | None:
        base = histogram_brute(n - 1, jobs=ctx.jobs, ceiling=ctx.ceiling).coeffs
        full = histogram_brute(n, jobs=ctx.jobs, progress=ctx.progress, ceiling=ctx.ceiling).coeffs
        summed = [0] * len(full)
        for j in itertools.chain(range(-n, 0), range(1, n + 1)):
            counts = class_histogram(n, j, jobs=ctx.jobs, ceiling=ctx.ceiling)
            if sum(counts) != size:
                return mismatch(f"|C_{j}|", size, sum(counts))
            shift = class_shift(n, j)
            shifted = [0] * shift + list(base)
            failure = _compare(f"C_{j} shift {shift}", shifted, counts)
            if failure:
                return failure
            for k, c in enumerate(counts):
                summed[k] += c
        return _compare("sum of classes", full, summed)

    return run_check("classes", {"n": n, "class_size": size}, body)


def check_length(n: int, ctx: CheckContext) -> VerificationReport:
    def body() -> str | None:
        for m in range(1, n + 1):
            for w in stream(m, 0, group_order(m)):
                if cayley_length(w) != inv_b(w):
                    return mismatch(f"w={w}", cayley_length(w), inv_b(w))
        return None

    return run_check("length", {"n": n}, body)


def check_longest(n: int, ctx: CheckContext) -> VerificationReport:
    def body() -> str | None:
        w0 = longest_element(n)
        if inv_b(w0) != n * n:
            return mismatch("inv_B(w_0)", n * n, inv_b(w0))
        if rank(w0) != group_order(n) - 1:
            return mismatch("rank(w_0)", group_order(n) - 1, rank(w0))
        if inv_b(identity(n)) != 0:
            return mismatch("inv_B(e)", 0, inv_b(identity(n)))
        row = histogram_brute(n, jobs=ctx.jobs, progress=ctx.progress, ceiling=ctx.ceiling)
        if row[0] != 1:
            return mismatch("elements with inv_B = 0", 1, row[0])
        if row[n * n] != 1:
            return mismatch(f"elements with inv_B = {n * n}", 1, row[n * n])
        return None

    return run_check("longest", {"n": n}, body)


def check_relations(n: int, ctx: CheckContext) -> VerificationReport:
    return verify_relations(n)


def check_examples(n: int, ctx: CheckContext) -> VerificationReport:
    """Hand-checked values; n is ignored."""

    def body() -> str | None:
        w = parse_window(WORKED_EXAMPLE)
        table = inversion_table(w)
        if table.digits != (3, 7, 8, 7, 0, 3, 1, 0):
            return mismatch(f"table of {w}", "(3:7:8:7:0:3:1:0)", table)
        if inv_b(w) != 29:
            return mismatch(f"inv_B({w})", 29, inv_b(w))
        if decode(table) != w:
            return mismatch(f"decode({table})", w, decode(table))
        for (m, k), expected in {(4, 7): 44, (5, 11): 325, (5, 17): 215}.items():
            value = row_recurrence(TriangleKind.B, m)[k]
            if value != expected:
                return mismatch(f"i_B({m},{k})", expected, value)
        s0 = diagonal_series(0, 8).coeffs
        if s0 != (1, 0, 0, 1, 5, 22, 90, 359, 1415):
            return mismatch("S_0 prefix", (1, 0, 0, 1, 5, 22, 90, 359, 1415), s0)
        if total_inversions(TriangleKind.B, 1, TotalsMethod.RECURRENCE) != 1:
            return mismatch("B_1", 1, total_inversions(TriangleKind.B, 1, TotalsMethod.RECURRENCE))
        for (m, k), expected in {(5, 4): 20, (6, 6): 90}.items():
            if knuth_netto(m, k) != expected:
                return mismatch(f"knuth-netto i({m},{k})", expected, knuth_netto(m, k))
        return None

    return run_check("examples", {}, body)


CHECKS: dict[str, Check] = {
    c.name: c
    for c in (
        Check("symmetry", check_symmetry, 1, 40, help="rows palindromic, row sums n! and 2^n n!"),
        Check("recurrence", check_recurrence, 1, 40, help="product rows equal longitudinal recurrence rows"),
        Check("sliding", check_sliding, 2, 40, help="type-B product rows equal the sliding-window recurrence"),
        Check("totals", check_totals, 1, 50, help="closed form, recurrence and moment totals agree"),
        Check("equidist", check_equidist, 1, brute=True, help="inv_B and fmaj histograms agree by enumeration"),
        Check("bijection", check_bijection, 1, 64, help="encode/decode and rank/unrank are inverse"),
        Check("relations", check_relations, 2, 8, help="Coxeter presentation relations hold"),
        Check("classes", check_classes, 2, brute=True, help="class histograms are shifted B_{n-1} histograms"),
        Check("knuth-netto", check_knuth_netto, 1, 60, help="pentagonal formula matches i(n,k), k <= n"),
        Check("gf", check_gf, 0, 60, help="S_j = (xC)^j S_0 up to order n, j <= 4"),
        Check("length", check_length, 1, 4, help="inv_B equals Cayley-graph distance"),
        Check("backward", check_backward, 1, 200, help="inv_B(w) + inv_B(backward(w)) = C(n,2) + 2 neg_sum(w)"),
        Check("longest", check_longest, 1, brute=True, help="identity and w_0 are the unique extremes"),
        Check("examples", check_examples, help="worked example and spot values"),
    )
}

ALL = "all"
CHECK_NAMES = (*CHECKS, ALL)


def plan(name: str, n: int, ctx: CheckContext) -> list[tuple[Check, int]]:
    """
    Resolve a check name to (check, n) pairs. `all` clamps n into each
    check's range; a single named check outside its range is an error.
    """
    if name == ALL:
        return [(check, check.clamp(n, ctx)) for check in CHECKS.values()]
    try:
        check = CHECKS[name]
    except KeyError:
        raise RangeViolationError(f"unknown check {name!r}; expected one of {', '.join(CHECK_NAMES)}")
    if not check.accepts(n, ctx):
        lo, hi = check.bounds(ctx)
        raise RangeViolationError(
            f"check {name} needs {lo if lo is not None else '-inf'} <= n <= {hi if hi is not None else 'inf'}, got n={n}"
        )
    return [(check, n)]


def run_checks(name: str, n: int, ctx: Optional[CheckContext] = None) -> list[VerificationReport]:
    ctx = ctx or CheckContext()
    reports = []
    for check, size in plan(name, n, ctx):
        logger.info("running check %s with n=%d", check.name, size)
        reports.append(check.run(size, ctx))
    return reports
