"""Append-only cache of computed census rows.

One JSON record per line behind a self-describing header.  Rows carry a
64-bit content hash; a corrupted row, a schema mismatch, or two rows that
disagree about the same genus raise :class:`CacheConflict`.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CacheConflict
from .tree import StratumRow

__all__ = ["CensusCache", "CensusRecord", "ENV_CACHE_PATH", "row_checksum"]

ENV_CACHE_PATH = "EVENGAP_CACHE"
_SCHEMA = 1
_FORMAT = "evengap-census"


def row_checksum(genus: int, counts) -> str:
    payload = (str(genus) + ":" + ",".join(str(c) for c in counts)).encode()
    return hashlib.blake2b(payload, digest_size=8).hexdigest()


@dataclass(frozen=True)
class CensusRecord:
    genus: int
    counts: tuple[int, ...]
    total: int
    checksum: str
    meta: dict = field(default_factory=dict)

    @classmethod
    def from_row(cls, row: StratumRow, meta: dict | None = None) -> "CensusRecord":
        return cls(
            row.genus,
            row.counts,
            row.total,
            row_checksum(row.genus, row.counts),
            dict(meta or {}),
        )

    def to_row(self) -> StratumRow:
        return StratumRow(self.genus, self.counts, self.total)


class CensusCache:
    """File-backed store of census rows keyed by genus."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)

    def load(self) -> dict[int, CensusRecord]:
        if not self.path.exists():
            return {}
        records: dict[int, CensusRecord] = {}
        with self.path.open("r", encoding="utf-8") as fh:
            header_line = fh.readline()
            try:
                header = json.loads(header_line)
            except json.JSONDecodeError as exc:
                raise CacheConflict(f"unreadable cache header: {exc}") from exc
            if header.get("format") != _FORMAT or header.get("schema") != _SCHEMA:
                raise CacheConflict(f"unsupported cache header {header!r}")
            for lineno, line in enumerate(fh, start=2):
                if not line.strip():
                    continue
                try:
                    raw = json.loads(line)
                    record = CensusRecord(
                        int(raw["genus"]),
                        tuple(int(c) for c in raw["counts"]),
                        int(raw["total"]),
                        str(raw["checksum"]),
                        dict(raw.get("meta", {})),
                    )
                except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                    raise CacheConflict(
                        f"{self.path}:{lineno}: unreadable record: {exc}"
                    ) from exc
                expected = row_checksum(record.genus, record.counts)
                if record.checksum != expected or record.total != sum(record.counts):
                    raise CacheConflict(
                        f"{self.path}:{lineno}: corrupted row for genus {record.genus}"
                    )
                seen = records.get(record.genus)
                if seen is not None and seen.counts != record.counts:
                    raise CacheConflict(
                        f"{self.path}:{lineno}: conflicting rows for genus "
                        f"{record.genus}"
                    )
                records[record.genus] = record
        return records

    def append(self, new_records: list[CensusRecord]) -> None:
        """Append records, refusing any that conflict with stored rows."""
        existing = self.load()
        for record in new_records:
            seen = existing.get(record.genus)
            if seen is not None and seen.counts != record.counts:
                raise CacheConflict(
                    f"refusing to append conflicting row for genus {record.genus}"
                )
        fresh = not self.path.exists()
        with self.path.open("a", encoding="utf-8") as fh:
            if fresh:
                fh.write(json.dumps({"format": _FORMAT, "schema": _SCHEMA}) + "\n")
            for record in new_records:
                if record.genus in existing:
                    continue
                fh.write(
                    json.dumps(
                        {
                            "genus": record.genus,
                            "counts": list(record.counts),
                            "total": record.total,
                            "checksum": record.checksum,
                            "meta": record.meta,
                        },
                        sort_keys=True,
                    )
                    + "\n"
                )
