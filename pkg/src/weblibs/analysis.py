"""Per-site and corpus findings over labelled, detection-annotated trees.

Vulnerability exposure is counted over distinct (library, version) pairs per
site, so including the same copy a dozen times never inflates the numbers.
Lag is measured both in days behind the newest release and in patch versions
behind within the used branch.  Aliasing findings flag version-prefix URLs
that resolved to a newer release, and the remediation check asks whether
patch-level updates alone could clear every known-vulnerable inclusion.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable
from urllib.parse import urlsplit

from .catalogue import MIN_MATCHABLE_BYTES, Catalogue
from .causality import (
    CausalityNode,
    CausalityTree,
    DocumentDuplicates,
    classify_inclusion,
    duplicate_inclusions,
    host_of,
    same_or_subdomain,
)
from .detection import (
    Detection,
    DetectionCounters,
    ScriptSample,
    merge_detections,
    parse_probe_output,
    static_detect,
)
from .semver import SemVer

WORDPRESS_MARKER = "/wp-content/"

LAG_PERCENTILES = (5, 25, 50, 75, 95)

# Report-layer display thresholds; flags, not data suppression.
LOW_CONFIDENCE_BELOW = 100  # vulnerable inclusions
OMIT_BELOW = 10  # total inclusions after filter

_VERSION_SEGMENT_RE = re.compile(r"^(\d+)(?:\.(\d+))?$")


def attach_detections(tree: CausalityTree, cat: Catalogue) -> DetectionCounters:
    """Run static detection over script digests, parse the tree's probe hits
    and attach the merged per-node detections. Returns the discard counters."""
    counters = DetectionCounters(unmatched_probe_hits=tree.unmatched_probe_hits)
    static: list[Detection] = []
    for node in tree.script_nodes():
        if node.digest is None:
            continue
        byte_length = node.byte_length or 0
        sample = ScriptSample(
            node_id=node.node_id,
            bytes_length=byte_length,
            digest=node.digest,
            url=None if node.kind == "script_inline" else node.url,
            inline=node.kind == "script_inline",
        )
        det = static_detect(sample, cat)
        if det is not None:
            static.append(det)
        elif byte_length < MIN_MATCHABLE_BYTES:
            counters.size_filtered += 1
    dynamic: list[Detection] = []
    for hit in tree.probe_hits:
        det = parse_probe_output(hit, counters.probe_discards)
        if det is not None:
            dynamic.append(det)
    merged = merge_detections(static, dynamic)
    by_node: dict[str, list[Detection]] = {}
    for det in merged:
        by_node.setdefault(det.node_id, []).append(det)
    for node_id, dets in by_node.items():
        node = tree.nodes.get(node_id)
        if node is not None:
            node.detections = dets
    return counters


@dataclass(frozen=True)
class Inclusion:
    """One detected library occurrence with its risk-factor attributes."""

    detection: Detection
    node_id: str
    url: str | None
    inclusion_class: str  # inline | internal | external
    parent_class: str
    direct_in_root: bool
    labels: frozenset[str]
    wordpress: bool
    vulnerable: bool
    vuln_ids: tuple[str, ...]
    lag_days: int | None
    patch_lag: int | None

    @property
    def library_id(self) -> str:
        return self.detection.library_id

    @property
    def version(self) -> str:
        return str(self.detection.version)


@dataclass(frozen=True)
class AliasingFinding:
    """A version-prefix URL that resolved to a newer concrete release."""

    library_id: str
    url_version_prefix: str
    resolved_version: SemVer
    avoids_vulnerability: bool


@dataclass
class SiteReport:
    site_domain: str
    inclusions: list[Inclusion]
    vulnerable_distinct_versions: int
    max_lag_days: int
    max_patch_lag_versions: int
    duplicates: list[DocumentDuplicates]
    aliasing: list[AliasingFinding]
    remediable_by_patch: bool
    script_hosts: list[str] = field(default_factory=list)
    library_hosts: list[str] = field(default_factory=list)
    counters: dict[str, int] = field(default_factory=dict)

    @property
    def any_same_version_duplicate(self) -> bool:
        return any(d.same_version_duplicate for d in self.duplicates)

    @property
    def any_multi_version(self) -> bool:
        return any(d.multi_version for d in self.duplicates)


# Named inclusion filters, one per risk-factor table row.
INCLUSION_FILTERS: dict[str, Callable[[Inclusion], bool]] = {
    "all": lambda i: True,
    "internal": lambda i: i.inclusion_class == "internal",
    "external": lambda i: i.inclusion_class == "external",
    "inline": lambda i: i.inclusion_class == "inline",
    "internal-parent": lambda i: i.parent_class == "internal",
    "external-parent": lambda i: i.parent_class == "external",
    "inline-parent": lambda i: i.parent_class == "inline",
    "direct-in-root": lambda i: i.direct_in_root,
    "indirect": lambda i: not i.direct_in_root,
    "wordpress": lambda i: i.wordpress,
    "non-wordpress": lambda i: not i.wordpress,
    "ad-widget-tracker": lambda i: bool(i.labels),
    "no-ad-widget-tracker": lambda i: not i.labels,
}


def _build_inclusion(
    tree: CausalityTree, node: CausalityNode, det: Detection, cat: Catalogue
) -> Inclusion:
    parent = tree.parent(node.node_id)
    parent_class = (
        classify_inclusion(parent, tree.site_domain) if parent is not None else "inline"
    )
    direct_in_root = tree.parent_id(node.node_id) == tree.root_id
    wordpress = WORDPRESS_MARKER in (node.url or "") or (
        parent is not None and WORDPRESS_MARKER in (parent.url or "")
    )
    vulnerable = False
    vuln_ids: tuple[str, ...] = ()
    lag: int | None = None
    patch_lag: int | None = None
    if det.library_id in cat.library_ids:
        records = cat.vulnerabilities_for(det.library_id, det.version)
        vulnerable = bool(records)
        vuln_ids = tuple(sorted(r.vuln_id for r in records))
        if cat.release(det.library_id, det.version) is not None:
            lag = cat.lag_days(det.library_id, det.version)
        patch_lag = cat.patch_lag(det.library_id, det.version)
    return Inclusion(
        detection=det,
        node_id=node.node_id,
        url=node.url,
        inclusion_class=classify_inclusion(node, tree.site_domain),
        parent_class=parent_class,
        direct_in_root=direct_in_root,
        labels=frozenset(node.labels),
        wordpress=wordpress,
        vulnerable=vulnerable,
        vuln_ids=vuln_ids,
        lag_days=lag,
        patch_lag=patch_lag,
    )


def site_report(tree: CausalityTree, cat: Catalogue,
                counters: DetectionCounters | None = None) -> SiteReport:
    """Summarise one labelled tree with detections attached.

    Vulnerability counting deduplicates to distinct (library, version) pairs
    per site; unknown versions are excluded from lag statistics but counted.
    """
    inclusions: list[Inclusion] = []
    unknown_library = 0
    unknown_version = 0
    script_hosts: set[str] = set()
    library_hosts: set[str] = set()
    for node in tree.iter_nodes():
        if not node.is_script:
            continue
        host = host_of(node.url)
        if host is not None:
            script_hosts.add(host)
        for det in node.detections:
            inc = _build_inclusion(tree, node, det, cat)
            inclusions.append(inc)
            if det.library_id not in cat.library_ids:
                unknown_library += 1
            elif cat.release(det.library_id, det.version) is None:
                unknown_version += 1
            if host is not None:
                library_hosts.add(host)

    vulnerable_pairs = {
        (i.library_id, i.version) for i in inclusions if i.vulnerable
    }
    report = SiteReport(
        site_domain=tree.site_domain,
        inclusions=inclusions,
        vulnerable_distinct_versions=len(vulnerable_pairs),
        max_lag_days=max((i.lag_days for i in inclusions if i.lag_days is not None), default=0),
        max_patch_lag_versions=max(
            (i.patch_lag for i in inclusions if i.patch_lag is not None), default=0
        ),
        duplicates=duplicate_inclusions(tree),
        aliasing=detect_version_aliasing(tree, cat),
        remediable_by_patch=True,
        script_hosts=sorted(script_hosts),
        library_hosts=sorted(library_hosts),
    )
    report.remediable_by_patch = remediation_check(report, cat)
    if counters is not None:
        report.counters = counters.as_dict()
    if unknown_library:
        report.counters["unknown_library"] = unknown_library
    if unknown_version:
        report.counters["unknown_version"] = unknown_version
    if tree.skipped_events:
        report.counters["skipped_events"] = tree.skipped_events
    return report


@dataclass(frozen=True)
class FractionCell:
    """A vulnerable-fraction table cell with its display flags."""

    numerator: int
    denominator: int

    @property
    def fraction(self) -> float | None:
        if self.denominator == 0:
            return None
        return self.numerator / self.denominator

    @property
    def omitted(self) -> bool:
        return self.denominator < OMIT_BELOW

    @property
    def low_confidence(self) -> bool:
        return self.numerator < LOW_CONFIDENCE_BELOW


def library_vulnerable_fraction(
    reports: Iterable[SiteReport],
    library_id: str,
    inclusion_filter: str | Callable[[Inclusion], bool] = "all",
) -> FractionCell:
    """Vulnerable (library, version)-per-site pairs over all such pairs under
    a filter; a pair counts for a site when at least one of its inclusions
    there passes the filter."""
    predicate = (
        INCLUSION_FILTERS[inclusion_filter]
        if isinstance(inclusion_filter, str)
        else inclusion_filter
    )
    total = 0
    vulnerable = 0
    for report in reports:
        pairs: dict[str, bool] = {}
        for inc in report.inclusions:
            if inc.library_id != library_id or not predicate(inc):
                continue
            pairs[inc.version] = pairs.get(inc.version, False) or inc.vulnerable
        total += len(pairs)
        vulnerable += sum(1 for v in pairs.values() if v)
    return FractionCell(vulnerable, total)


def percentile(sorted_values: list, q: int):
    """Nearest-rank percentile over a pre-sorted list."""
    if not sorted_values:
        return None
    idx = max(0, math.ceil(q / 100 * len(sorted_values)) - 1)
    return sorted_values[min(idx, len(sorted_values) - 1)]


@dataclass
class LagReport:
    site_count: int
    percentiles: dict[int, int]
    fraction_patch_behind: float | None


def lag_report(reports: Iterable[SiteReport]) -> LagReport:
    """Distribution of each site's maximum lag plus how many sites are at
    least one patch version behind. Sites without any lag-measurable
    inclusion stay out of the distribution."""
    lags: list[int] = []
    with_inclusions = 0
    patch_behind = 0
    for report in reports:
        if report.inclusions:
            with_inclusions += 1
            if report.max_patch_lag_versions >= 1:
                patch_behind += 1
        measurable = [i.lag_days for i in report.inclusions if i.lag_days is not None]
        if measurable:
            lags.append(max(measurable))
    lags.sort()
    return LagReport(
        site_count=len(lags),
        percentiles={q: percentile(lags, q) for q in LAG_PERCENTILES} if lags else {},
        fraction_patch_behind=(patch_behind / with_inclusions) if with_inclusions else None,
    )


def _url_version_prefix(url: str) -> str | None:
    """First whole path segment that reads as a 1- or 2-component version."""
    try:
        path = urlsplit(url).path
    except ValueError:
        return None
    for segment in path.split("/"):
        if _VERSION_SEGMENT_RE.match(segment):
            return segment
    return None


def zero_extend(prefix: str) -> SemVer:
    parts = [int(p) for p in prefix.split(".")]
    while len(parts) < 3:
        parts.append(0)
    return SemVer(parts[0], parts[1], parts[2])


def detect_version_aliasing(
    tree: CausalityTree, cat: Catalogue, cdn_hosts: set[str] | None = None
) -> list[AliasingFinding]:
    """Flag inclusions requested by version prefix that resolved newer.

    A finding needs (1) a 1-2 component version segment in the script URL
    and (2) a detected version greater than the prefix extended with zeros.
    At most one finding per library per site.  ``cdn_hosts`` restricts the
    scan to specific serving hosts; by default any host qualifies.
    """
    findings: dict[str, AliasingFinding] = {}
    for node in tree.iter_nodes():
        if not node.is_script or not node.url or not node.detections:
            continue
        if cdn_hosts is not None:
            host = host_of(node.url)
            if host is None or not any(same_or_subdomain(host, c) for c in cdn_hosts):
                continue
        prefix = _url_version_prefix(node.url)
        if prefix is None:
            continue
        floor = zero_extend(prefix)
        for det in node.detections:
            if det.library_id in findings or det.library_id not in cat.library_ids:
                continue
            if not det.version > floor:
                continue
            branch_vulnerable = any(
                cat.is_vulnerable(det.library_id, rel.version)
                for rel in cat.branch_releases(det.library_id, floor.branch)
            )
            resolved_clean = not cat.is_vulnerable(det.library_id, det.version)
            findings[det.library_id] = AliasingFinding(
                library_id=det.library_id,
                url_version_prefix=prefix,
                resolved_version=det.version,
                avoids_vulnerability=branch_vulnerable and resolved_clean,
            )
    return [findings[lib] for lib in sorted(findings)]


def remediation_check(report: SiteReport, cat: Catalogue) -> bool:
    """Could the site clear all known-vulnerable inclusions with patch-level
    updates alone?  True iff every vulnerable (library, version) has a
    higher-patch release in its branch with no known vulnerabilities.
    Vacuously true without vulnerable inclusions."""
    vulnerable_pairs = {
        (i.library_id, i.detection.version) for i in report.inclusions if i.vulnerable
    }
    for library_id, version in vulnerable_pairs:
        candidates = [
            rel.version
            for rel in cat.branch_releases(library_id, version.branch)
            if rel.version > version and not cat.is_vulnerable(library_id, rel.version)
        ]
        if not candidates:
            return False
    return True


@dataclass
class OriginRow:
    """Inclusion-origin shares for one library (site-deduplicated)."""

    library_id: str
    sites: int
    class_pairs: dict[str, int]  # inclusion class -> (site, class) pair count
    ad_tracker_widget_sites: int

    def share(self, inclusion_class: str) -> float | None:
        total = sum(self.class_pairs.values())
        if total == 0:
            return None
        return self.class_pairs.get(inclusion_class, 0) / total

    @property
    def ad_share(self) -> float | None:
        if self.sites == 0:
            return None
        return self.ad_tracker_widget_sites / self.sites


@dataclass
class HostShare:
    hostname: str
    sites: int
    share: float


@dataclass
class DistSummary:
    sites_with_any: int
    median: float | None
    p95: int | None
    max: int | None


@dataclass
class CorpusReport:
    site_count: int
    libraries: list[str]
    vulnerable_fractions: dict[str, dict[str, FractionCell]]  # filter -> library -> cell
    origins: dict[str, OriginRow]
    host_shares_scripts: list[HostShare]
    host_shares_libraries: list[HostShare]
    lag: LagReport
    inclusion_type_distribution: dict[str, DistSummary]


def _host_shares(host_sets: Iterable[list[str]]) -> list[HostShare]:
    counts: Counter = Counter()
    for hosts in host_sets:
        counts.update(set(hosts))
    total_pairs = sum(counts.values())
    shares = [
        HostShare(host, n, n / total_pairs)
        for host, n in counts.items()
    ]
    shares.sort(key=lambda s: (-s.sites, s.hostname))
    return shares


def risk_breakdown(reports: list[SiteReport]) -> CorpusReport:
    """Aggregate site reports into the corpus tables: per-library vulnerable
    fractions under every inclusion filter, inclusion-origin shares, host
    market shares (each hostname counted at most once per site, subdomains
    never grouped), lag percentiles and inclusion-type distributions."""
    libraries = sorted({i.library_id for r in reports for i in r.inclusions})

    fractions: dict[str, dict[str, FractionCell]] = {}
    for filter_name in INCLUSION_FILTERS:
        fractions[filter_name] = {
            lib: library_vulnerable_fraction(reports, lib, filter_name)
            for lib in libraries
        }

    origins: dict[str, OriginRow] = {}
    for lib in libraries:
        sites = 0
        class_pairs: Counter = Counter()
        labelled_sites = 0
        for report in reports:
            classes = {i.inclusion_class for i in report.inclusions if i.library_id == lib}
            if not classes:
                continue
            sites += 1
            class_pairs.update(classes)
            if any(i.labels for i in report.inclusions if i.library_id == lib):
                labelled_sites += 1
        origins[lib] = OriginRow(lib, sites, dict(class_pairs), labelled_sites)

    per_class_counts: dict[str, list[int]] = {"inline": [], "internal": [], "external": []}
    for report in reports:
        tally = Counter(i.inclusion_class for i in report.inclusions)
        for cls in per_class_counts:
            per_class_counts[cls].append(tally.get(cls, 0))
    distribution: dict[str, DistSummary] = {}
    for cls, values in per_class_counts.items():
        nonzero = [v for v in values if v > 0]
        ordered = sorted(values)
        distribution[cls] = DistSummary(
            sites_with_any=len(nonzero),
            median=(None if not ordered else float(
                ordered[(len(ordered) - 1) // 2] if len(ordered) % 2 else
                (ordered[len(ordered) // 2 - 1] + ordered[len(ordered) // 2]) / 2
            )),
            p95=percentile(ordered, 95),
            max=ordered[-1] if ordered else None,
        )

    return CorpusReport(
        site_count=len(reports),
        libraries=libraries,
        vulnerable_fractions=fractions,
        origins=origins,
        host_shares_scripts=_host_shares(r.script_hosts for r in reports),
        host_shares_libraries=_host_shares(r.library_hosts for r in reports),
        lag=lag_report(reports),
        inclusion_type_distribution=distribution,
    )
