"""Growth diagnostics for the stable stratum counts.

All ratios are exact rationals internally and are rendered to two decimals
with round-half-even, so fixed inputs produce byte-identical tables.  The
interesting comparison point is the squared golden ratio, printed as a
reference only; nothing here asserts anything about limits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["RatioRow", "build_ratio_rows", "format_ratio", "PHI", "PHI_SQUARED"]

PHI = (1 + math.sqrt(5)) / 2
PHI_SQUARED = PHI * PHI


@dataclass(frozen=True)
class RatioRow:
    """One diagnostics row.

    ``ratio_prev`` is absent at gamma = 0 and ``ratio_partial_sum`` (next
    value over the running sum so far) at the last computed gamma.
    """

    gamma: int
    value: int
    census_at_double: int
    ratio_prev: Fraction | None
    ratio_census: Fraction
    ratio_partial_sum: Fraction | None


def build_ratio_rows(values: list[int], census_totals: list[int]) -> list[RatioRow]:
    """Rows for gamma in [0, len(values) - 1].

    ``census_totals[g]`` must cover g up to 2 * (len(values) - 1).
    """
    last = len(values) - 1
    if len(census_totals) < 2 * last + 1:
        raise ValueError("census totals must reach genus 2 * max gamma")
    rows = []
    running = 0
    for gamma, value in enumerate(values):
        prev = Fraction(value, values[gamma - 1]) if gamma > 0 else None
        census = Fraction(value, census_totals[2 * gamma])
        running += value
        nxt = Fraction(values[gamma + 1], running) if gamma < last else None
        rows.append(RatioRow(gamma, value, census_totals[2 * gamma], prev, census, nxt))
    return rows


def format_ratio(value: Fraction | None) -> str:
    """Exact two-decimal rendering, round-half-even; '' for absent."""
    if value is None:
        return ""
    num, den = 100 * value.numerator, value.denominator
    q, r = divmod(num, den)
    if 2 * r > den or (2 * r == den and q % 2 == 1):
        q += 1
    return f"{q // 100}.{q % 100:02d}"
