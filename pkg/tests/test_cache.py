import json

import pytest

from evengap.cache import CensusCache, CensusRecord, row_checksum
from evengap.errors import CacheConflict
from evengap.tree import census


def make_records(max_genus):
    return [CensusRecord.from_row(row, {"workers": 1}) for row in census(max_genus)]


def test_roundtrip(tmp_path):
    path = tmp_path / "rows.cache"
    cache = CensusCache(path)
    records = make_records(6)
    cache.append(records)
    loaded = cache.load()
    assert loaded == {record.genus: record for record in records}
    for record in loaded.values():
        assert record.to_row() == census(6)[record.genus]


def test_append_is_idempotent_and_extends(tmp_path):
    cache = CensusCache(tmp_path / "rows.cache")
    cache.append(make_records(4))
    cache.append(make_records(6))  # re-appends 0..4 silently, adds 5..6
    loaded = cache.load()
    assert sorted(loaded) == list(range(7))
    text = (tmp_path / "rows.cache").read_text()
    assert len(text.splitlines()) == 1 + 7  # header plus one line per genus


def test_conflicting_append_rejected(tmp_path):
    cache = CensusCache(tmp_path / "rows.cache")
    cache.append(make_records(4))
    bogus = CensusRecord(3, (1, 2, 2), 5, row_checksum(3, (1, 2, 2)))
    with pytest.raises(CacheConflict):
        cache.append([bogus])


def test_corrupted_row_detected(tmp_path):
    path = tmp_path / "rows.cache"
    cache = CensusCache(path)
    cache.append(make_records(4))
    lines = path.read_text().splitlines()
    raw = json.loads(lines[-1])
    raw["counts"][0] += 1  # break the checksum
    lines[-1] = json.dumps(raw)
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(CacheConflict):
        cache.load()


def test_conflicting_rows_detected(tmp_path):
    path = tmp_path / "rows.cache"
    cache = CensusCache(path)
    cache.append(make_records(4))
    with path.open("a") as fh:
        fh.write(
            json.dumps(
                {
                    "genus": 3,
                    "counts": [1, 2, 2],
                    "total": 5,
                    "checksum": row_checksum(3, (1, 2, 2)),
                    "meta": {},
                }
            )
            + "\n"
        )
    with pytest.raises(CacheConflict):
        cache.load()


def test_bad_header_detected(tmp_path):
    path = tmp_path / "rows.cache"
    path.write_text('{"format": "something-else", "schema": 9}\n')
    with pytest.raises(CacheConflict):
        CensusCache(path).load()


def test_missing_file_is_empty(tmp_path):
    assert CensusCache(tmp_path / "absent.cache").load() == {}
