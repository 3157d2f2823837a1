"""Crawl event log records.

A crawl emits one JSON object per line describing frame, document, script
and resource activity plus probe hits and provenance label hints.  Trees are
assembled from these logs in a post-processing step, so the log is the only
interface between a crawler (or the probe harness) and this toolkit.  Field
names are documented in ``docs/event-schema.md``; ``seq`` gaps are fine but
ordering is mandatory.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

EVENT_KINDS = (
    "frame_attached",
    "document_committed",
    "script_created",
    "resource_requested",
    "url_changed",
    "probe_detection",
    "label_hint",
)

RESOURCE_KINDS = ("image", "stylesheet", "other")
LABELS = ("ad", "tracker", "widget")


class EventLogError(Exception):
    """Malformed event log (bad record or ordering violation)."""


@dataclass(frozen=True)
class CrawlEvent:
    seq: int
    timestamp_ms: int
    kind: str
    frame_id: str
    node_id: str | None = None
    initiator_node_id: str | None = None
    url: str | None = None
    inline: bool = False
    source_digest: str | None = None
    source_bytes: int | None = None
    attached_document_node_id: str | None = None
    resource_kind: str = "other"
    library_id: str | None = None
    raw_version: str | None = None
    label: str | None = None


def _err(lineno: int, message: str) -> EventLogError:
    return EventLogError(f"line {lineno}: {message}")


def _event_from_record(lineno: int, rec: dict) -> CrawlEvent:
    kind = rec.get("kind")
    if kind not in EVENT_KINDS:
        raise _err(lineno, f"unknown event kind {kind!r}")
    for name in ("seq", "frame_id"):
        if rec.get(name) is None:
            raise _err(lineno, f"{kind} event missing field {name!r}")
    if not isinstance(rec["seq"], int):
        raise _err(lineno, "seq must be an integer")

    if kind == "document_committed" and not rec.get("url"):
        raise _err(lineno, "document_committed event carries no url")
    if kind == "script_created":
        inline = bool(rec.get("inline", False))
        if inline == bool(rec.get("url")):
            raise _err(lineno, "script_created needs exactly one of inline or url")
    if kind == "url_changed" and not rec.get("url"):
        raise _err(lineno, "url_changed event carries no url")
    if kind == "probe_detection" and not rec.get("library_id"):
        raise _err(lineno, "probe_detection event carries no library_id")
    if kind == "label_hint" and rec.get("label") not in LABELS:
        raise _err(lineno, f"label_hint with unknown label {rec.get('label')!r}")
    resource_kind = rec.get("resource_kind", "other")
    if resource_kind not in RESOURCE_KINDS:
        raise _err(lineno, f"unknown resource_kind {resource_kind!r}")

    return CrawlEvent(
        seq=rec["seq"],
        timestamp_ms=int(rec.get("timestamp_ms", 0)),
        kind=kind,
        frame_id=str(rec["frame_id"]),
        node_id=None if rec.get("node_id") is None else str(rec["node_id"]),
        initiator_node_id=(
            None if rec.get("initiator_node_id") is None else str(rec["initiator_node_id"])
        ),
        url=rec.get("url"),
        inline=bool(rec.get("inline", False)),
        source_digest=(
            None if rec.get("source_digest") is None else str(rec["source_digest"]).lower()
        ),
        source_bytes=rec.get("source_bytes"),
        attached_document_node_id=rec.get("attached_document_node_id"),
        resource_kind=resource_kind,
        library_id=rec.get("library_id"),
        raw_version=rec.get("raw_version"),
        label=rec.get("label"),
    )


def parse_event_log(source: IO[bytes] | IO[str] | Iterable[str]) -> list[CrawlEvent]:
    """Parse a line-delimited event log, enforcing strictly increasing seq."""
    events: list[CrawlEvent] = []
    last_seq: int | None = None
    for lineno, raw_line in enumerate(source, start=1):
        if isinstance(raw_line, bytes):
            raw_line = raw_line.decode("utf-8")
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise _err(lineno, f"invalid JSON: {exc.msg}") from None
        if not isinstance(rec, dict):
            raise _err(lineno, "record is not an object")
        event = _event_from_record(lineno, rec)
        if last_seq is not None and event.seq <= last_seq:
            raise _err(lineno, f"seq {event.seq} not greater than previous {last_seq}")
        last_seq = event.seq
        events.append(event)
    return events


def parse_event_log_path(path: str) -> list[CrawlEvent]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_event_log(fh)


def event_to_record(event: CrawlEvent) -> dict:
    """Serialize an event back to its line-record form (omitting defaults)."""
    rec: dict = {
        "seq": event.seq,
        "timestamp_ms": event.timestamp_ms,
        "kind": event.kind,
        "frame_id": event.frame_id,
    }
    if event.node_id is not None:
        rec["node_id"] = event.node_id
    if event.initiator_node_id is not None:
        rec["initiator_node_id"] = event.initiator_node_id
    if event.url is not None:
        rec["url"] = event.url
    if event.inline:
        rec["inline"] = True
    if event.source_digest is not None:
        rec["source_digest"] = event.source_digest
    if event.source_bytes is not None:
        rec["source_bytes"] = event.source_bytes
    if event.attached_document_node_id is not None:
        rec["attached_document_node_id"] = event.attached_document_node_id
    if event.resource_kind != "other":
        rec["resource_kind"] = event.resource_kind
    if event.library_id is not None:
        rec["library_id"] = event.library_id
    if event.raw_version is not None:
        rec["raw_version"] = event.raw_version
    if event.label is not None:
        rec["label"] = event.label
    return rec


def write_event_log(events: Iterable[CrawlEvent], fh: IO[str]) -> None:
    for event in events:
        fh.write(json.dumps(event_to_record(event), sort_keys=True))
        fh.write("\n")


def iter_event_lines(events: Iterable[CrawlEvent]) -> Iterator[str]:
    for event in events:
        yield json.dumps(event_to_record(event), sort_keys=True)
