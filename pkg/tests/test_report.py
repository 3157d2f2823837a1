"""Report serialization and table rendering conventions."""

from __future__ import annotations

import io
import json

from weblibs.analysis import FractionCell, risk_breakdown, site_report
from weblibs.report import (
    _fraction_text,
    render_corpus_tables,
    site_report_record,
    write_corpus_report,
    write_site_reports,
)
from weblibs.semver import parse_version

from conftest import make_tree_with_detections

V = parse_version


def _reports(cat):
    specs_a = [
        {"library": "jquery", "version": V("1.6.2"), "labels": ("ad",)},
        {"library": "jquery", "version": V("2.2.0")},
    ]
    specs_b = [{"library": "modernizr", "version": V("2.8.3")}]
    return [
        site_report(make_tree_with_detections(specs_a, "alpha.com"), cat),
        site_report(make_tree_with_detections(specs_b, "beta.com"), cat),
    ]


def test_site_records_sorted_and_json_safe(cat):
    buf = io.StringIO()
    write_site_reports(reversed(_reports(cat)), buf)
    lines = buf.getvalue().strip().splitlines()
    domains = [json.loads(line)["site_domain"] for line in lines]
    assert domains == ["alpha.com", "beta.com"]
    rec = json.loads(lines[0])
    assert rec["inclusions"][0]["library"] == "jquery"
    assert rec["inclusions"][0]["labels"] == ["ad"]


def test_site_record_carries_duplicate_and_alias_fields(cat):
    report = _reports(cat)[0]
    rec = site_report_record(report)
    assert set(rec) >= {
        "duplicates", "aliasing", "vulnerable_distinct_versions",
        "max_lag_days", "max_patch_lag_versions", "remediable_by_patch",
    }


def test_fraction_text_conventions():
    assert _fraction_text(FractionCell(0, 0)) == "-"
    assert _fraction_text(FractionCell(3, 9)) == "-"  # omitted under 10 total
    assert _fraction_text(FractionCell(3, 10)) == "(30.0%)"  # low confidence
    assert _fraction_text(FractionCell(150, 400)) == "37.5%"


def test_render_tables_smoke(cat):
    corpus = risk_breakdown(_reports(cat))
    text = render_corpus_tables(corpus)
    assert "Library inclusion origins" in text
    assert "Vulnerable fraction" in text
    assert "jquery" in text and "modernizr" in text
    assert "All Inclusions" in text
    assert "Ad/Widget/Tracker" in text

    buf = io.StringIO()
    write_corpus_report(corpus, buf)
    payload = json.loads(buf.getvalue())
    assert payload["site_count"] == 2
    assert "vulnerable_fractions" in payload
