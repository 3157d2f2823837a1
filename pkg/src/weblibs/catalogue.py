"""Library metadata catalogue: releases, reference files and vulnerabilities.

The catalogue is the ground truth the rest of the pipeline queries: which
versions of a library exist and when they were released, the content hashes
of pristine release files, and which version ranges are known to be
vulnerable.  It is immutable after loading and safe to share across workers.

File format: one JSON object per line with a ``kind`` discriminator
(``library``, ``release``, ``reffile``, ``vuln``).  See
``docs/catalogue-schema.md`` for the exact field names.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from datetime import date
from typing import IO, Iterable

from .semver import SemVer, parse_version

log = logging.getLogger(__name__)

# Reference files below this many bytes are too generic to identify a library
# release (configuration stubs, localisations, plug-in shims share hashes).
MIN_MATCHABLE_BYTES = 996

REFFILE_VARIANTS = ("full", "minified", "other")
VULN_KINDS = ("range", "at_most")


class CatalogueError(Exception):
    """Schema violation or failed lookup against the catalogue."""


@dataclass(frozen=True)
class VersionRelease:
    library_id: str
    version: SemVer
    release_date: date


@dataclass(frozen=True)
class ReferenceFile:
    library_id: str
    version: SemVer
    variant: str  # full | minified | other
    byte_length: int
    digest: str  # lowercase hex SHA-256 over the raw file bytes

    @property
    def matchable(self) -> bool:
        return self.byte_length >= MIN_MATCHABLE_BYTES


@dataclass(frozen=True)
class VulnerabilityRecord:
    """One known vulnerability and the versions it affects.

    ``kind="range"`` covers ``range_low <= v < range_high`` (half-open: the
    fix version is the natural exclusive bound; an absent low means unbounded
    below).  ``kind="at_most"`` covers ``v <= at_most_version`` inclusive,
    for flaws reported against a specific version with no documented fix
    boundary.
    """

    library_id: str
    vuln_id: str
    kind: str  # range | at_most
    range_low: SemVer | None = None
    range_high: SemVer | None = None
    at_most_version: SemVer | None = None

    def __post_init__(self) -> None:
        if self.kind == "range":
            if self.range_high is None:
                raise CatalogueError(
                    f"{self.vuln_id}: range vulnerability needs an upper bound"
                )
            if self.range_low is not None and not (self.range_low < self.range_high):
                raise CatalogueError(
                    f"{self.vuln_id}: empty range {self.range_low}..{self.range_high}"
                )
        elif self.kind == "at_most":
            if self.at_most_version is None:
                raise CatalogueError(
                    f"{self.vuln_id}: at_most vulnerability needs a version"
                )
        else:
            raise CatalogueError(f"{self.vuln_id}: unknown kind {self.kind!r}")

    def contains(self, v: SemVer) -> bool:
        if self.kind == "at_most":
            assert self.at_most_version is not None
            return v <= self.at_most_version
        assert self.range_high is not None
        if self.range_low is not None and v < self.range_low:
            return False
        return v < self.range_high


@dataclass
class Catalogue:
    """Immutable-after-load library metadata store."""

    library_ids: set[str] = field(default_factory=set)
    releases: list[VersionRelease] = field(default_factory=list)
    reference_files: list[ReferenceFile] = field(default_factory=list)
    vulnerabilities: list[VulnerabilityRecord] = field(default_factory=list)
    heuristic_tokens: dict[str, str] = field(default_factory=dict)
    dropped_small_files: int = 0

    _releases_by_library: dict[str, list[VersionRelease]] = field(
        default_factory=dict, repr=False
    )
    _release_index: dict[tuple[str, SemVer], VersionRelease] = field(
        default_factory=dict, repr=False
    )
    _reference_by_digest: dict[str, ReferenceFile] = field(
        default_factory=dict, repr=False
    )
    _vulns_by_library: dict[str, list[VulnerabilityRecord]] = field(
        default_factory=dict, repr=False
    )

    def _reindex(self) -> None:
        self._releases_by_library = {}
        self._release_index = {}
        for rel in self.releases:
            self._releases_by_library.setdefault(rel.library_id, []).append(rel)
            self._release_index[(rel.library_id, rel.version)] = rel
        self._reference_by_digest = {
            rf.digest: rf for rf in self.reference_files if rf.matchable
        }
        self._vulns_by_library = {}
        for rec in self.vulnerabilities:
            self._vulns_by_library.setdefault(rec.library_id, []).append(rec)

    def _require_library(self, library_id: str) -> None:
        if library_id not in self.library_ids:
            raise CatalogueError(f"unknown library: {library_id!r}")

    def releases_for(self, library_id: str) -> list[VersionRelease]:
        self._require_library(library_id)
        return list(self._releases_by_library.get(library_id, ()))

    def release(self, library_id: str, v: SemVer) -> VersionRelease | None:
        return self._release_index.get((library_id, v))

    def vulnerabilities_for(self, library_id: str, v: SemVer) -> list[VulnerabilityRecord]:
        """All records whose affected range contains ``v`` (empty list means
        not known-vulnerable)."""
        self._require_library(library_id)
        return [rec for rec in self._vulns_by_library.get(library_id, ()) if rec.contains(v)]

    def is_vulnerable(self, library_id: str, v: SemVer) -> bool:
        return bool(self.vulnerabilities_for(library_id, v))

    def newest_release(self, library_id: str) -> VersionRelease:
        """The release with the maximal version (not the latest date), so a
        maintenance re-release of an old branch never masquerades as newest."""
        releases = self.releases_for(library_id)
        if not releases:
            raise CatalogueError(f"library {library_id!r} has no releases")
        return max(releases, key=lambda r: r.version._key())

    def branch_releases(self, library_id: str, branch: tuple[int, int]) -> list[VersionRelease]:
        self._require_library(library_id)
        return [
            r for r in self._releases_by_library.get(library_id, ()) if r.version.branch == branch
        ]

    def latest_in_patch_branch(self, library_id: str, v: SemVer) -> SemVer:
        """Maximal catalogued version sharing (major, minor) with ``v``."""
        in_branch = self.branch_releases(library_id, v.branch)
        if not in_branch:
            raise CatalogueError(
                f"no release of {library_id!r} in branch {v.major}.{v.minor}"
            )
        return max(r.version for r in in_branch)

    def lag_days(self, library_id: str, v: SemVer) -> int:
        """Whole days between the release of ``v`` and the newest release,
        clamped at zero for re-released old branches."""
        rel = self.release(library_id, v)
        if rel is None:
            self._require_library(library_id)
            raise CatalogueError(f"unknown version: {library_id} {v}")
        newest = self.newest_release(library_id)
        return max(0, (newest.release_date - rel.release_date).days)

    def patch_lag(self, library_id: str, v: SemVer) -> int:
        """Number of catalogued releases in v's patch branch that are newer."""
        self._require_library(library_id)
        return sum(
            1 for r in self.branch_releases(library_id, v.branch) if r.version > v
        )

    def reference_for_digest(self, digest: str) -> ReferenceFile | None:
        return self._reference_by_digest.get(digest.lower())

    def heuristic_token(self, library_id: str) -> str:
        """URL substring token for the name-in-URL heuristic; defaults to the
        lowercase library id."""
        return self.heuristic_tokens.get(library_id, library_id.lower())


def _err(lineno: int, message: str) -> CatalogueError:
    return CatalogueError(f"line {lineno}: {message}")


def _parse_date(lineno: int, text: str) -> date:
    try:
        return date.fromisoformat(text)
    except (TypeError, ValueError):
        raise _err(lineno, f"invalid ISO-8601 date: {text!r}") from None


def _parse_semver(lineno: int, text: str) -> SemVer:
    try:
        return parse_version(text)
    except Exception:
        raise _err(lineno, f"invalid version string: {text!r}") from None


def _require_fields(lineno: int, rec: dict, *names: str) -> None:
    for name in names:
        if name not in rec or rec[name] is None:
            raise _err(lineno, f"{rec.get('kind', '?')} record missing field {name!r}")


def load_catalogue(source: IO[bytes] | IO[str] | Iterable[str]) -> Catalogue:
    """Parse a line-delimited catalogue file and enforce its invariants.

    Reference files below :data:`MIN_MATCHABLE_BYTES` are dropped from the
    matchable set (counted in ``dropped_small_files``).  Any schema violation
    raises :class:`CatalogueError` naming the first offending record.
    """
    cat = Catalogue()
    seen_releases: set[tuple[str, SemVer]] = set()
    seen_digests: set[str] = set()
    pending_reffiles: list[tuple[int, ReferenceFile]] = []
    pending_vulns: list[tuple[int, VulnerabilityRecord]] = []

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
        kind = rec.get("kind")

        if kind == "library":
            _require_fields(lineno, rec, "id")
            lib = rec["id"]
            if lib in cat.library_ids:
                raise _err(lineno, f"duplicate library {lib!r}")
            cat.library_ids.add(lib)
            token = rec.get("heuristic_token")
            if token:
                cat.heuristic_tokens[lib] = str(token).lower()

        elif kind == "release":
            _require_fields(lineno, rec, "library", "version", "date")
            version = _parse_semver(lineno, rec["version"])
            key = (rec["library"], version)
            if key in seen_releases:
                raise _err(lineno, f"duplicate release {rec['library']} {version}")
            seen_releases.add(key)
            cat.releases.append(
                VersionRelease(rec["library"], version, _parse_date(lineno, rec["date"]))
            )

        elif kind == "reffile":
            _require_fields(lineno, rec, "library", "version", "variant", "bytes", "sha256")
            if rec["variant"] not in REFFILE_VARIANTS:
                raise _err(lineno, f"unknown variant {rec['variant']!r}")
            digest = str(rec["sha256"]).lower()
            if len(digest) != 64 or any(c not in "0123456789abcdef" for c in digest):
                raise _err(lineno, f"digest is not 32-byte lowercase hex: {rec['sha256']!r}")
            byte_length = rec["bytes"]
            if not isinstance(byte_length, int) or byte_length < 0:
                raise _err(lineno, f"invalid byte length: {byte_length!r}")
            rf = ReferenceFile(
                rec["library"], _parse_semver(lineno, rec["version"]),
                rec["variant"], byte_length, digest,
            )
            if not rf.matchable:
                cat.dropped_small_files += 1
                continue
            if digest in seen_digests:
                raise _err(lineno, f"duplicate digest in matchable set: {digest}")
            seen_digests.add(digest)
            pending_reffiles.append((lineno, rf))

        elif kind == "vuln":
            _require_fields(lineno, rec, "library", "id")
            low = rec.get("low")
            high = rec.get("high")
            at_most = rec.get("at_most")
            try:
                if at_most is not None:
                    if low is not None or high is not None:
                        raise _err(lineno, "at_most record cannot carry range bounds")
                    vr = VulnerabilityRecord(
                        rec["library"], rec["id"], "at_most",
                        at_most_version=_parse_semver(lineno, at_most),
                    )
                else:
                    if high is None:
                        raise _err(lineno, "vuln record needs either 'at_most' or 'high'")
                    vr = VulnerabilityRecord(
                        rec["library"], rec["id"], "range",
                        range_low=None if low is None else _parse_semver(lineno, low),
                        range_high=_parse_semver(lineno, high),
                    )
            except CatalogueError as exc:
                if str(exc).startswith("line "):
                    raise
                raise _err(lineno, str(exc)) from None
            pending_vulns.append((lineno, vr))

        else:
            raise _err(lineno, f"unknown record kind {kind!r}")

    for lineno, rf in pending_reffiles:
        if rf.library_id not in cat.library_ids:
            raise _err(lineno, f"reffile references unknown library {rf.library_id!r}")
        if (rf.library_id, rf.version) not in seen_releases:
            raise _err(
                lineno, f"reffile references unknown release {rf.library_id} {rf.version}"
            )
        cat.reference_files.append(rf)
    for lineno, vr in pending_vulns:
        if vr.library_id not in cat.library_ids:
            raise _err(lineno, f"vuln references unknown library {vr.library_id!r}")
        cat.vulnerabilities.append(vr)
    for rel in cat.releases:
        if rel.library_id not in cat.library_ids:
            raise CatalogueError(
                f"release references unknown library {rel.library_id!r}"
            )

    cat._reindex()
    if cat.dropped_small_files:
        log.warning(
            "dropped %d reference file(s) below the %d-byte floor",
            cat.dropped_small_files, MIN_MATCHABLE_BYTES,
        )
    return cat


def load_catalogue_path(path: str) -> Catalogue:
    with open(path, "r", encoding="utf-8") as fh:
        return load_catalogue(fh)
