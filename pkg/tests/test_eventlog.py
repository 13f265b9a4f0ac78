"""Durability layer: append, replay, and corruption detection."""

from __future__ import annotations

from datetime import datetime, timezone

import pytest

from vmlab.eventlog import CorruptLogError, EventLog


def test_append_assigns_increasing_sequence_numbers(tmp_path):
    log = EventLog(tmp_path)
    first = log.append("a", None, {"x": 1})
    second = log.append("b", "s1", {"y": 2})
    log.close()
    assert (first.seq, second.seq) == (1, 2)
    day = datetime.now(timezone.utc).strftime("%Y%m%d")
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == [f"events-{day}.jsonl"]
    text = (tmp_path / files[0]).read_text(encoding="utf-8")
    assert text.endswith("\n")
    assert text.count("\n") == 2


def test_replay_round_trips_payloads_and_unicode(tmp_path):
    log = EventLog(tmp_path)
    log.append("noted", "s1", {"text": "350 μm", "n": [1, 2, 3]}, at=12.5)
    log.close()
    raw = next(iter((tmp_path.glob("events-*.jsonl")))).read_text(encoding="utf-8")
    assert "μm" in raw  # stored readably, not \u-escaped

    reopened = EventLog(tmp_path)
    records = list(reopened.replay())
    reopened.close()
    assert len(records) == 1
    assert records[0].kind == "noted"
    assert records[0].session_id == "s1"
    assert records[0].payload == {"text": "350 μm", "n": [1, 2, 3]}
    assert records[0].at == 12.5


def test_reopened_log_continues_the_sequence(tmp_path):
    log = EventLog(tmp_path)
    log.append("a", None, {})
    log.append("b", None, {})
    log.close()
    log = EventLog(tmp_path)
    third = log.append("c", None, {})
    log.close()
    assert third.seq == 3


def test_torn_final_line_is_reported_with_location(tmp_path):
    log = EventLog(tmp_path)
    log.append("a", None, {})
    log.close()
    path = next(iter(tmp_path.glob("events-*.jsonl")))
    with open(path, "a", encoding="utf-8") as handle:
        handle.write('{"seq":2,"at":1.0,"kind":"b"')  # crash mid-write
    with pytest.raises(CorruptLogError) as info:
        EventLog(tmp_path)
    assert f"{path.name}:2" in str(info.value)


def test_sequence_regression_is_rejected(tmp_path):
    path = tmp_path / "events-20260101.jsonl"
    path.write_text(
        '{"seq":2,"at":1.0,"kind":"a","session_id":null,"payload":{}}\n'
        '{"seq":2,"at":2.0,"kind":"b","session_id":null,"payload":{}}\n',
        encoding="utf-8",
    )
    with pytest.raises(CorruptLogError) as info:
        EventLog(tmp_path)
    assert "seq 2 after 2" in str(info.value)


def test_blank_lines_are_tolerated(tmp_path):
    path = tmp_path / "events-20260101.jsonl"
    path.write_text(
        '{"seq":1,"at":1.0,"kind":"a","session_id":null,"payload":{}}\n'
        "\n"
        '{"seq":2,"at":2.0,"kind":"b","session_id":null,"payload":{}}\n',
        encoding="utf-8",
    )
    log = EventLog(tmp_path)
    assert [r.seq for r in log.replay()] == [1, 2]
    log.close()
