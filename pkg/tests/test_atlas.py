import csv
import io
import json
from pathlib import Path

import pytest

from acmgon import atlas
from acmgon.engine import RECORD_FIELDS, record_invariant_violations
from acmgon.errors import InvalidInput

GOLDEN = Path(__file__).parent / "golden"


def test_taxonomy_rows():
    assert [len(atlas.genus_taxonomy(g)) for g in range(7)] == [1, 1, 1, 2, 2, 3, 5]
    with pytest.raises(InvalidInput):
        atlas.genus_taxonomy(7)


def test_taxonomy_gonality_in_range():
    for g in range(7):
        for row in atlas.genus_taxonomy(g):
            assert row.genus == g
            assert 1 <= row.gonality <= max(1, (g + 3) // 2)


def test_genus_six_quintic_row():
    row = next(r for r in atlas.genus_taxonomy(6) if "quintic" in r.label)
    assert row.series == "g^2_5" and row.gonality == 4


def test_builtin_examples():
    entries = atlas.builtin_examples()
    assert len(entries) >= 10
    ids = [e.entry_id for e in entries]
    assert len(ids) == len(set(ids))
    by_id = {e.entry_id: e for e in entries}
    for a in (3, 4, 5):
        assert by_id[f"ex-2.10-a{a}"].record.computed_by_multisecants is False
    for d in (6, 7, 8):
        e = by_id[f"ex-2.9-general-d{d}"]
        assert e.existential and e.record.computed_by_multisecants is False
        assert e.record.k_effective == 4 and e.record.gon == 1
    assert by_id["ex-2.9-bideg-1-5"].record.computed_by_multisecants is True
    assert by_id["ex-2.8-r3"].record.cliff_dim == 3
    ci = by_id["ex-2.4-ci-4-5-general"].record
    assert (ci.d, ci.gon, ci.k_effective) == (20, 16, 4)
    for e in entries:
        assert record_invariant_violations(e.record) == [], e.entry_id


def test_acm_table():
    rows = atlas.acm_table(9)
    assert [r.trace_id for r in rows] == ["cubic-A0", "cubic-B0", "cubic-C0", "cubic-A1", "cubic-D0"]
    degs = [r.d for r in atlas.acm_table(30)]
    assert degs == sorted(degs) and len(degs) == 33
    with pytest.raises(InvalidInput):
        atlas.acm_table(5)


def test_table_matches_golden():
    assert atlas.records_to_json(atlas.acm_table(30)) + "\n" == (GOLDEN / "table_max30.json").read_text()


def test_csv():
    text = atlas.entries_csv(atlas.builtin_examples())
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == atlas.CSV_HEADER
    assert len(rows) == len(atlas.builtin_examples()) + 1
    assert all(len(r) == len(atlas.CSV_HEADER) for r in rows)


def test_entries_json():
    data = json.loads(atlas.entries_to_json(atlas.builtin_examples()))
    for obj in data:
        assert set(RECORD_FIELDS) <= set(obj)
        assert {"id", "citation", "note", "existential"} <= set(obj)
