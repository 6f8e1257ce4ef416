from __future__ import annotations

from typing import Iterable, Optional

from codes.bijection import format_table, rank
from core.exceptions import RangeViolationError
from core.flag_major import fmaj
from core.inversions import inv_b, inversion_table
from core.permutations import SignedPermutation, backward, class_index, format_window, neg_sum

STAT_KEYS = ("invtable", "inv", "fmaj", "rank", "class", "backward", "negsum")

_STATS = {
    "invtable": lambda w: format_table(inversion_table(w)),
    "inv": inv_b,
    "fmaj": fmaj,
    "rank": rank,
    "class": class_index,
    "backward": lambda w: format_window(backward(w)),
    "negsum": neg_sum,
}


def parse_show(text: Optional[str]) -> list[str]:
    """Comma-separated subset of STAT_KEYS; empty means all, in STAT_KEYS order."""
    if not text:
        return list(STAT_KEYS)
    keys = [k.strip() for k in text.split(",") if k.strip()]
    unknown = [k for k in keys if k not in _STATS]
    if unknown:
        raise RangeViolationError(f"unknown statistic {unknown[0]!r}; expected any of {','.join(STAT_KEYS)}")
    return keys


def compute_stats(w: SignedPermutation, keys: Iterable[str]) -> dict[str, int | str]:
    return {key: _STATS[key](w) for key in keys}
