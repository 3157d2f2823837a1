"""Report output: structured line-delimited records and rendered tables.

Site reports serialize one JSON object per line, sorted by domain; the
corpus report is a single JSON document.  Rendering produces plain-text
tables (inclusion origins, vulnerable fractions by filter, host market
shares, lag percentiles) with the display conventions: cells under the
confidence threshold are parenthesised, cells under the omission threshold
print as ``-``.  All output is byte-identical across runs on equal inputs —
run metadata belongs in a sidecar, never in report bodies.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from typing import IO, Iterable

from .analysis import (
    INCLUSION_FILTERS,
    LOW_CONFIDENCE_BELOW,
    OMIT_BELOW,
    CorpusReport,
    FractionCell,
    SiteReport,
)

FILTER_ROW_TITLES = {
    "all": "All Inclusions",
    "internal": "Internal",
    "external": "External",
    "inline": "Inline",
    "internal-parent": "Internal Parent",
    "external-parent": "External Parent",
    "inline-parent": "Inline Parent",
    "direct-in-root": "Direct Incl. in Root",
    "indirect": "Indirect Inclusion",
    "wordpress": "WordPress",
    "non-wordpress": "Non-WordPress",
    "ad-widget-tracker": "Ad/Widget/Tracker",
    "no-ad-widget-tracker": "No Ad/Widget/Tracker",
}


def site_report_record(report: SiteReport) -> dict:
    """JSON-safe dict for one site report."""
    rec = {
        "site_domain": report.site_domain,
        "vulnerable_distinct_versions": report.vulnerable_distinct_versions,
        "max_lag_days": report.max_lag_days,
        "max_patch_lag_versions": report.max_patch_lag_versions,
        "remediable_by_patch": report.remediable_by_patch,
        "any_same_version_duplicate": report.any_same_version_duplicate,
        "any_multi_version": report.any_multi_version,
        "script_hosts": report.script_hosts,
        "library_hosts": report.library_hosts,
        "counters": dict(sorted(report.counters.items())),
        "inclusions": [
            {
                "node": inc.node_id,
                "library": inc.library_id,
                "version": inc.version,
                "method": inc.detection.method,
                "conflict": inc.detection.conflict,
                "url": inc.url,
                "class": inc.inclusion_class,
                "parent_class": inc.parent_class,
                "direct_in_root": inc.direct_in_root,
                "labels": sorted(inc.labels),
                "wordpress": inc.wordpress,
                "vulnerable": inc.vulnerable,
                "vuln_ids": list(inc.vuln_ids),
                "lag_days": inc.lag_days,
                "patch_lag": inc.patch_lag,
            }
            for inc in report.inclusions
        ],
        "duplicates": [asdict(d) for d in report.duplicates],
        "aliasing": [
            {
                "library": a.library_id,
                "url_version_prefix": a.url_version_prefix,
                "resolved_version": str(a.resolved_version),
                "avoids_vulnerability": a.avoids_vulnerability,
            }
            for a in report.aliasing
        ],
    }
    return rec


def write_site_reports(reports: Iterable[SiteReport], fh: IO[str]) -> None:
    for report in sorted(reports, key=lambda r: r.site_domain):
        fh.write(json.dumps(site_report_record(report), sort_keys=True))
        fh.write("\n")


def corpus_report_record(corpus: CorpusReport) -> dict:
    return {
        "site_count": corpus.site_count,
        "libraries": corpus.libraries,
        "vulnerable_fractions": {
            filter_name: {
                lib: {
                    "vulnerable": cell.numerator,
                    "total": cell.denominator,
                    "fraction": cell.fraction,
                    "low_confidence": cell.low_confidence,
                    "omitted": cell.omitted,
                }
                for lib, cell in sorted(cells.items())
            }
            for filter_name, cells in sorted(corpus.vulnerable_fractions.items())
        },
        "origins": {
            lib: {
                "sites": row.sites,
                "class_pairs": dict(sorted(row.class_pairs.items())),
                "ad_tracker_widget_sites": row.ad_tracker_widget_sites,
            }
            for lib, row in sorted(corpus.origins.items())
        },
        "host_shares": {
            "scripts": [
                {"host": s.hostname, "sites": s.sites, "share": s.share}
                for s in corpus.host_shares_scripts
            ],
            "libraries": [
                {"host": s.hostname, "sites": s.sites, "share": s.share}
                for s in corpus.host_shares_libraries
            ],
        },
        "lag": {
            "site_count": corpus.lag.site_count,
            "percentiles": {str(k): v for k, v in corpus.lag.percentiles.items()},
            "fraction_patch_behind": corpus.lag.fraction_patch_behind,
        },
        "inclusion_type_distribution": {
            cls: asdict(summary)
            for cls, summary in sorted(corpus.inclusion_type_distribution.items())
        },
    }


def write_corpus_report(corpus: CorpusReport, fh: IO[str]) -> None:
    json.dump(corpus_report_record(corpus), fh, sort_keys=True, indent=2)
    fh.write("\n")


def _fraction_text(cell: FractionCell) -> str:
    if cell.omitted or cell.fraction is None:
        return "-"
    text = f"{cell.fraction * 100:.1f}%"
    if cell.low_confidence:
        return f"({text})"
    return text


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    out = []
    out.append("  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip())
    out.append("  ".join("-" * w for w in widths))
    for row in rows:
        out.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip())
    return "\n".join(out)


def render_corpus_tables(corpus: CorpusReport) -> str:
    """Plain-text tables for the corpus report."""
    sections: list[str] = []

    headers = ["Library", "Inline", "Internal", "External", "Ad/Tr./Widget", "Sites"]
    rows = []
    for lib in corpus.libraries:
        row = corpus.origins[lib]

        def pct(value: float | None) -> str:
            return "-" if value is None else f"{value * 100:.1f}%"

        rows.append(
            [
                lib,
                pct(row.share("inline")),
                pct(row.share("internal")),
                pct(row.share("external")),
                pct(row.ad_share),
                str(row.sites),
            ]
        )
    sections.append(
        "Library inclusion origins (libraries counted at most once per site)\n"
        + _table(headers, rows)
    )

    headers = ["Inclusion Filter"] + corpus.libraries
    rows = []
    for filter_name in INCLUSION_FILTERS:
        cells = corpus.vulnerable_fractions[filter_name]
        rows.append(
            [FILTER_ROW_TITLES[filter_name]]
            + [_fraction_text(cells[lib]) for lib in corpus.libraries]
        )
    sections.append(
        "Vulnerable fraction of inclusions per library "
        "(at most one library-version pair per site;\n"
        f"parenthesised below {LOW_CONFIDENCE_BELOW} vulnerable, "
        f"'-' below {OMIT_BELOW} total)\n"
        + _table(headers, rows)
    )

    for title, shares in (
        ("Script hosts: market share (each hostname at most once per site)",
         corpus.host_shares_scripts),
        ("Detected library hosts: market share", corpus.host_shares_libraries),
    ):
        headers = ["Hostname", "Sites", "Share"]
        rows = [
            [s.hostname, str(s.sites), f"{s.share * 100:.1f}%"] for s in shares[:10]
        ]
        sections.append(title + "\n" + _table(headers, rows))

    lag = corpus.lag
    if lag.site_count:
        pct_rows = [[f"p{q}", str(lag.percentiles[q])] for q in sorted(lag.percentiles)]
        behind = (
            "-"
            if lag.fraction_patch_behind is None
            else f"{lag.fraction_patch_behind * 100:.1f}%"
        )
        sections.append(
            f"Per-site maximum lag in days ({lag.site_count} sites; "
            f"{behind} of sites at least one patch version behind)\n"
            + _table(["Percentile", "Days"], pct_rows)
        )
    else:
        sections.append("Per-site maximum lag: no measurable inclusions")

    return "\n\n".join(sections) + "\n"
