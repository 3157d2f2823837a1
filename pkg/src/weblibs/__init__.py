"""weblibs: client-side library usage analytics from crawl event logs.

Builds causality trees (which element caused which to load), identifies
library versions via reference hashes and runtime probe output, labels
ad/tracker/widget provenance with filter lists, and reports vulnerability
exposure, version lag, duplicate inclusions, version aliasing and
patch-level remediation feasibility per site and per corpus.
"""

__version__ = "0.1.0"

from .analysis import (
    AliasingFinding,
    CorpusReport,
    SiteReport,
    attach_detections,
    detect_version_aliasing,
    lag_report,
    library_vulnerable_fraction,
    remediation_check,
    risk_breakdown,
    site_report,
)
from .catalogue import (
    Catalogue,
    CatalogueError,
    ReferenceFile,
    VersionRelease,
    VulnerabilityRecord,
    load_catalogue,
    load_catalogue_path,
)
from .causality import (
    CausalityNode,
    CausalityTree,
    TreeBuildError,
    build_tree,
    classify_inclusion,
    duplicate_inclusions,
    propagate_labels,
    tree_metrics,
)
from .detection import (
    Detection,
    ProbeResult,
    ProbeSpec,
    ScriptSample,
    merge_detections,
    name_in_url_heuristic,
    parse_probe_output,
    static_detect,
)
from .dot import export_dot
from .events import CrawlEvent, EventLogError, parse_event_log, parse_event_log_path
from .filterlist import (
    FilterRule,
    FilterSet,
    MatchContext,
    label_tree,
    parse_filter_list,
    url_matches,
)
from .semver import SemVer, VersionParseError, compare_versions, parse_version

__all__ = [
    "AliasingFinding",
    "Catalogue",
    "CatalogueError",
    "CausalityNode",
    "CausalityTree",
    "CorpusReport",
    "CrawlEvent",
    "Detection",
    "EventLogError",
    "FilterRule",
    "FilterSet",
    "MatchContext",
    "ProbeResult",
    "ProbeSpec",
    "ReferenceFile",
    "ScriptSample",
    "SemVer",
    "SiteReport",
    "TreeBuildError",
    "VersionParseError",
    "VersionRelease",
    "VulnerabilityRecord",
    "attach_detections",
    "build_tree",
    "classify_inclusion",
    "compare_versions",
    "detect_version_aliasing",
    "duplicate_inclusions",
    "export_dot",
    "label_tree",
    "lag_report",
    "library_vulnerable_fraction",
    "load_catalogue",
    "load_catalogue_path",
    "merge_detections",
    "name_in_url_heuristic",
    "parse_event_log",
    "parse_event_log_path",
    "parse_filter_list",
    "parse_probe_output",
    "parse_version",
    "propagate_labels",
    "remediation_check",
    "risk_breakdown",
    "site_report",
    "static_detect",
    "tree_metrics",
    "url_matches",
]
