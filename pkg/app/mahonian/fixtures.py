"""
Bundled reference tables (the published Mahonian triangle, A008302, and its
type-B counterpart, A128084) and the comparison against generated rows.

Files per kind, both plain CSV with a header:
    table_<kind>.csv   n,k,value
    totals_<kind>.csv  n,total
"""
from __future__ import annotations

import csv
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from django.conf import settings

from core.reports import VerificationReport, mismatch, run_check

from .totals import total_inversions
from .triangles import TriangleKind, row_product

logger = logging.getLogger(__name__)

BUNDLED_FIXTURES_DIR = Path(__file__).resolve().parent / "data"


@dataclass
class FixtureTable:
    kind: str
    rows: dict[int, dict[int, int]] = field(default_factory=dict)
    totals: dict[int, int] = field(default_factory=dict)


def fixtures_dir() -> Path:
    return Path(getattr(settings, "MAHONIAN_FIXTURES_DIR", None) or BUNDLED_FIXTURES_DIR)


def _read_csv(path: Path) -> list[dict[str, str]]:
    with path.open(newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def load_fixture(kind: str, directory: Path | str | None = None) -> FixtureTable:
    """Raises FileNotFoundError when either file is missing."""
    kind = TriangleKind(kind)
    base = Path(directory) if directory else fixtures_dir()

    rows: dict[int, dict[int, int]] = defaultdict(dict)
    for rec in _read_csv(base / f"table_{kind.value}.csv"):
        rows[int(rec["n"])][int(rec["k"])] = int(rec["value"])

    totals = {int(rec["n"]): int(rec["total"]) for rec in _read_csv(base / f"totals_{kind.value}.csv")}
    logger.debug("loaded %s fixture from %s: rows %s", kind.value, base, sorted(rows))
    return FixtureTable(kind=kind, rows=dict(rows), totals=totals)


def compare_with_fixture(fixture: FixtureTable) -> VerificationReport:
    def body() -> str | None:
        for n in sorted(fixture.rows):
            cells = fixture.rows[n]
            row = row_product(fixture.kind, n)
            for k in range(max(len(row.coeffs), max(cells) + 1)):
                if row[k] != cells.get(k, 0):
                    return mismatch(f"({n},{k})", row[k], cells.get(k, 0))
        for n in sorted(fixture.totals):
            total = total_inversions(fixture.kind, n)
            if total != fixture.totals[n]:
                return mismatch(f"total n={n}", total, fixture.totals[n])
        return None

    return run_check(
        "oeis-check",
        {"type": str(fixture.kind), "rows": len(fixture.rows)},
        body,
    )
