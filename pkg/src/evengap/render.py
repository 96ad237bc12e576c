"""Table rendering: CSV, Markdown, and JSON off one table model.

All three formats carry the same cell values; CSV uses commas and LF line
endings with no locale formatting, blank cells render empty (null in JSON).
Output is byte-stable for fixed input.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

__all__ = ["Table", "render"]

FORMATS = ("csv", "md", "json")


@dataclass(frozen=True)
class Table:
    columns: tuple[str, ...]
    rows: list[tuple]
    notes: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError("row width does not match the header")


def _cell(value) -> str:
    return "" if value is None else str(value)


def _to_csv(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def _to_markdown(table: Table) -> str:
    widths = [len(c) for c in table.columns]
    cells = [[_cell(v) for v in row] for row in table.rows]
    for row in cells:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    lines = [
        "| " + " | ".join(c.ljust(w) for c, w in zip(table.columns, widths)) + " |",
        "|" + "|".join("-" * (w + 2) for w in widths) + "|",
    ]
    for row in cells:
        lines.append("| " + " | ".join(c.rjust(w) for c, w in zip(row, widths)) + " |")
    for note in table.notes:
        lines.append("")
        lines.append(note)
    return "\n".join(lines) + "\n"


def _to_json(table: Table) -> str:
    payload = {"columns": list(table.columns), "rows": [list(r) for r in table.rows]}
    if table.notes:
        payload["notes"] = list(table.notes)
    return json.dumps(payload, indent=2) + "\n"


def render(table: Table, fmt: str) -> str:
    if fmt == "csv":
        return _to_csv(table)
    if fmt == "md":
        return _to_markdown(table)
    if fmt == "json":
        return _to_json(table)
    raise ValueError(f"unknown format {fmt!r}; use one of {FORMATS}")
