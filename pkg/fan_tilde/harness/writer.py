"""JSON output: indented reports and compact JSON-lines corpus streams."""

from __future__ import annotations

import json

TYPE_CHECKING = False
if TYPE_CHECKING:
    from collections.abc import Iterable
    from typing import TextIO

    from fan_tilde.harness.corpus import CorpusSummary
    from fan_tilde.harness.records import VerificationRecord

SUMMARY_KEY = "summary"


def dumps_report(details: object) -> str:
    return json.dumps(details, indent=1)


def dumps_line(details: object) -> str:
    return json.dumps(details, separators=(",", ":"))


def write_record(record: VerificationRecord, stream: TextIO) -> None:
    stream.write(dumps_line(record.details) + "\n")


def write_records(records: Iterable[VerificationRecord], stream: TextIO) -> int:
    written = 0
    for record in records:
        write_record(record, stream)
        written += 1
    return written


def write_summary(summary: CorpusSummary, stream: TextIO) -> None:
    stream.write(dumps_line({SUMMARY_KEY: summary.details}) + "\n")


def read_lines(text: str) -> tuple[list[dict], dict | None]:
    """Split a JSON-lines report into its records and its summary."""
    records = []
    summary = None
    for line in text.splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        if SUMMARY_KEY in obj:
            summary = obj[SUMMARY_KEY]
        else:
            records.append(obj)
    return records, summary
