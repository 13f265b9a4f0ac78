"""Append-only JSONL event log with startup replay.

The log is the only thing the service persists.  Every state change is
appended as one JSON line to ``events-YYYYMMDD.jsonl`` under the data
directory, flushed and fsynced, and the full state is rebuilt by replaying
the files in order at startup.  There is exactly one logical writer.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterator, TextIO

from vmlab.model import LabError


class CorruptLogError(LabError):
    """An event file failed to parse or its sequence numbers went backwards."""


@dataclass(frozen=True)
class EventRecord:
    seq: int
    kind: str
    session_id: str | None
    payload: dict[str, Any]
    at: float


class EventLog:
    def __init__(self, data_dir: str | Path) -> None:
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._handle: TextIO | None = None
        self._handle_day: str | None = None
        self._seq = 0
        for record in self.replay():
            self._seq = record.seq

    def append(
        self,
        kind: str,
        session_id: str | None,
        payload: dict[str, Any],
        at: float | None = None,
    ) -> EventRecord:
        """Write one event durably and return it with its sequence number."""
        record = EventRecord(
            seq=self._seq + 1,
            kind=kind,
            session_id=session_id,
            payload=payload,
            at=time.time() if at is None else at,
        )
        line = json.dumps(
            {
                "seq": record.seq,
                "at": record.at,
                "kind": record.kind,
                "session_id": record.session_id,
                "payload": record.payload,
            },
            separators=(",", ":"),
            ensure_ascii=False,
        )
        day = datetime.now(timezone.utc).strftime("%Y%m%d")
        if self._handle is None or day != self._handle_day:
            if self._handle is not None:
                self._handle.close()
            self._handle = open(self.data_dir / f"events-{day}.jsonl", "a", encoding="utf-8")
            self._handle_day = day
        self._handle.write(line + "\n")
        self._handle.flush()
        os.fsync(self._handle.fileno())
        self._seq = record.seq
        return record

    def replay(self) -> Iterator[EventRecord]:
        """Yield every stored event in order, checking sequence monotonicity."""
        last_seq = 0
        for path in sorted(self.data_dir.glob("events-*.jsonl")):
            with open(path, encoding="utf-8") as handle:
                for line_no, line in enumerate(handle, start=1):
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        raw = json.loads(line)
                        record = EventRecord(
                            seq=raw["seq"],
                            kind=raw["kind"],
                            session_id=raw["session_id"],
                            payload=raw["payload"],
                            at=raw["at"],
                        )
                    except (json.JSONDecodeError, KeyError, TypeError) as exc:
                        raise CorruptLogError(f"{path.name}:{line_no}: {exc}") from exc
                    if record.seq <= last_seq:
                        raise CorruptLogError(
                            f"{path.name}:{line_no}: seq {record.seq} after {last_seq}"
                        )
                    last_seq = record.seq
                    yield record

    def close(self) -> None:
        if self._handle is not None:
            self._handle.close()
            self._handle = None
