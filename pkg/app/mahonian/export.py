from __future__ import annotations

import csv
from typing import IO, Iterable

from .totals import total_inversions
from .triangles import TriangleRow, row_product


def triangle_rows(kind: str, n_max: int) -> list[TriangleRow]:
    return [row_product(kind, n) for n in range(1, n_max + 1)]


def write_csv(rows: Iterable[TriangleRow], out: IO[str], *, with_totals: bool = False, long: bool = False) -> None:
    """
    Wide layout (default): one line per n, "n[,total],c0,c1,...", no header.
    Long layout: header "n,k,value" then one line per cell.
    """
    writer = csv.writer(out, lineterminator="\n")
    if long:
        writer.writerow(["n", "k", "value"])
        for row in rows:
            for k, value in enumerate(row.coeffs):
                writer.writerow([row.n, k, value])
        return

    for row in rows:
        head = [row.n]
        if with_totals:
            head.append(total_inversions(row.kind, row.n))
        writer.writerow(head + list(row.coeffs))


def rows_as_records(rows: Iterable[TriangleRow], *, with_totals: bool = False) -> list[dict]:
    records = []
    for row in rows:
        rec = {"n": row.n, "kind": str(row.kind), "coeffs": list(row.coeffs)}
        if with_totals:
            rec["total"] = total_inversions(row.kind, row.n)
        records.append(rec)
    return records
