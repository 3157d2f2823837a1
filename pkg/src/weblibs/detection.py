"""Library identification for script nodes.

Two complementary techniques: static detection compares content hashes
against pristine release files, dynamic detection parses the output of
runtime probes that read a library's version attribute.  Per-node evidence
from both routes is merged; a URL-substring heuristic is provided only for
comparison reports, never as a detection source.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field

from .catalogue import MIN_MATCHABLE_BYTES, Catalogue
from .semver import SemVer, try_parse_version

METHOD_STATIC = "static"
METHOD_DYNAMIC = "dynamic"
METHOD_BOTH = "both"

DISCARD_MISSING_VERSION = "missing-version"
DISCARD_INVALID_VERSION = "invalid-version"
DISCARD_UNATTRIBUTED = "unattributed-node"

PROBE_RESULT_CONTRACT = (
    "returns the version string when the library's version attribute exists, "
    "a no-version marker when the library is present without one, "
    "or an absent marker when the library is not loaded"
)


@dataclass(frozen=True)
class ScriptSample:
    """Digest and size of one observed script, inline or URL-based."""

    node_id: str
    bytes_length: int
    digest: str  # lowercase hex SHA-256 over the raw bytes
    url: str | None = None
    inline: bool = False

    def __post_init__(self) -> None:
        if self.inline and self.url is not None:
            raise ValueError("inline sample cannot carry a URL")


@dataclass(frozen=True)
class ProbeSpec:
    """Source of a runtime probe for one library."""

    library_id: str
    probe_source: str
    result_contract: str = PROBE_RESULT_CONTRACT

    def __post_init__(self) -> None:
        if not self.probe_source.strip():
            raise ValueError(f"empty probe source for {self.library_id!r}")


@dataclass(frozen=True)
class ProbeResult:
    """One raw probe hit as observed in a frame (or the offline harness)."""

    frame_id: str
    library_id: str
    raw_version: str | None
    implementing_node_id: str | None
    timestamp_ms: int = 0

    def __post_init__(self) -> None:
        if self.timestamp_ms < 0:
            raise ValueError("negative probe timestamp")


@dataclass(frozen=True)
class Detection:
    """A (library, version) identification for one script node."""

    node_id: str
    library_id: str
    version: SemVer
    method: str  # static | dynamic | both
    conflict: bool = False


def static_detect(sample: ScriptSample, cat: Catalogue) -> Detection | None:
    """Exact-hash lookup against the catalogue's matchable reference files.

    Samples below the matchable size floor never match, whatever their
    digest; absence is a valid result.
    """
    if sample.bytes_length < MIN_MATCHABLE_BYTES:
        return None
    rf = cat.reference_for_digest(sample.digest)
    if rf is None:
        return None
    return Detection(sample.node_id, rf.library_id, rf.version, METHOD_STATIC)


def parse_probe_output(
    raw: ProbeResult, discards: Counter | None = None
) -> Detection | None:
    """Turn a raw probe hit into a dynamic detection.

    A detection is produced only when the reported version string parses and
    the hit is attributed to a script node.  Everything else is discarded,
    counted by reason in ``discards`` when given: missing-version (library
    present, version attribute absent), invalid-version, unattributed-node.
    """

    def _discard(reason: str) -> None:
        if discards is not None:
            discards[reason] += 1

    if raw.raw_version is None or raw.raw_version == "":
        _discard(DISCARD_MISSING_VERSION)
        return None
    version = try_parse_version(raw.raw_version)
    if version is None:
        _discard(DISCARD_INVALID_VERSION)
        return None
    if not raw.implementing_node_id:
        _discard(DISCARD_UNATTRIBUTED)
        return None
    return Detection(raw.implementing_node_id, raw.library_id, version, METHOD_DYNAMIC)


def merge_detections(
    static: list[Detection], dynamic: list[Detection]
) -> list[Detection]:
    """Union of both techniques, keyed by (node, library).

    Agreeing versions collapse into one entry with ``method="both"``;
    disagreeing versions are preserved side by side with the conflict flag
    set rather than arbitrated.  No version-less entry can survive because
    detections carry a parsed version by construction.
    """
    by_key: dict[tuple[str, str], dict[SemVer, set[str]]] = {}
    order: list[tuple[str, str]] = []
    for det in list(static) + list(dynamic):
        key = (det.node_id, det.library_id)
        if key not in by_key:
            by_key[key] = {}
            order.append(key)
        by_key[key].setdefault(det.version, set()).add(det.method)

    merged: list[Detection] = []
    for key in order:
        node_id, library_id = key
        versions = by_key[key]
        conflict = len(versions) > 1
        for version, methods in versions.items():
            method = METHOD_BOTH if len(methods) > 1 else next(iter(methods))
            merged.append(Detection(node_id, library_id, version, method, conflict))
    return merged


def name_in_url_heuristic(url: str, library_id: str, token: str | None = None) -> bool:
    """Case-insensitive substring test of the library's token in a URL.

    Evaluated only to compare against real detections: plug-ins named after
    the library make it fire spuriously, and renamed copies escape it.
    """
    if not url:
        raise ValueError("empty URL")
    return (token or library_id).lower() in url.lower()


def heuristic_partition(
    script_urls: dict[str, str],
    detected_nodes: set[str],
    library_id: str,
    token: str | None = None,
) -> tuple[set[str], set[str], set[str]]:
    """Partition URL-bearing script nodes into (both, heuristic-only,
    detection-only) for a library, mirroring the heuristic-vs-detection
    comparison."""
    both: set[str] = set()
    heuristic_only: set[str] = set()
    detection_only: set[str] = set()
    for node_id, url in script_urls.items():
        hit = name_in_url_heuristic(url, library_id, token)
        detected = node_id in detected_nodes
        if hit and detected:
            both.add(node_id)
        elif hit:
            heuristic_only.add(node_id)
        elif detected:
            detection_only.add(node_id)
    return both, heuristic_only, detection_only


@dataclass
class DetectionCounters:
    """Bookkeeping emitted alongside merged detections."""

    size_filtered: int = 0
    probe_discards: Counter = field(default_factory=Counter)
    unmatched_probe_hits: int = 0

    def as_dict(self) -> dict[str, int]:
        out = {
            "size_filtered": self.size_filtered,
            "unmatched_probe_hits": self.unmatched_probe_hits,
        }
        for reason in sorted(self.probe_discards):
            out[f"probe_discarded_{reason}"] = self.probe_discards[reason]
        return out


def load_probe_specs(directory: str) -> dict[str, ProbeSpec]:
    """Read probe sources from ``<library_id>.js`` files in a directory."""
    specs: dict[str, ProbeSpec] = {}
    for name in sorted(os.listdir(directory)):
        if not name.endswith(".js"):
            continue
        library_id = name[: -len(".js")]
        with open(os.path.join(directory, name), "r", encoding="utf-8") as fh:
            specs[library_id] = ProbeSpec(library_id, fh.read())
    return specs
