"""Site and corpus reporting: vulnerability dedup, lag, aliasing,
remediation and risk-factor tables."""

from __future__ import annotations

import math
import random
from datetime import date
from urllib.parse import urlsplit

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weblibs.analysis import (
    INCLUSION_FILTERS,
    FractionCell,
    attach_detections,
    detect_version_aliasing,
    lag_report,
    library_vulnerable_fraction,
    percentile,
    remediation_check,
    risk_breakdown,
    site_report,
    zero_extend,
)
from weblibs.causality import build_tree
from weblibs.semver import parse_version

from conftest import (
    events_from_records,
    make_tree_with_detections,
    msgov_event_records,
)

V = parse_version


def report_for(cat, specs, site="example.com"):
    return site_report(make_tree_with_detections(specs, site), cat)


def test_site_with_single_vulnerable_version(cat):
    report = report_for(cat, [{"library": "jquery", "version": V("1.6.2")}])
    assert report.vulnerable_distinct_versions == 1
    # the clean 1.6.3 release sits in the same branch
    assert report.remediable_by_patch


def test_site_report_dedups_repeated_inclusions(cat):
    specs = [{"library": "jquery", "version": V("1.6.2")} for _ in range(12)]
    report = report_for(cat, specs)
    assert report.vulnerable_distinct_versions == 1


def test_site_report_empty_site(cat):
    report = report_for(cat, [])
    assert report.vulnerable_distinct_versions == 0
    assert report.max_lag_days == 0
    assert report.max_patch_lag_versions == 0
    assert report.duplicates == []
    assert report.aliasing == []
    assert report.remediable_by_patch  # vacuous


def test_site_report_msgov(cat):
    tree = build_tree(events_from_records(msgov_event_records()), "ms.gov")
    counters = attach_detections(tree, cat)
    report = site_report(tree, cat, counters)
    assert len(report.inclusions) == 13
    assert report.any_same_version_duplicate
    assert report.any_multi_version
    assert sum(1 for i in report.inclusions if i.direct_in_root) == 1
    assert report.vulnerable_distinct_versions == 0  # 2.2.x are clean here
    # lag: 2.2.0 (2016-01-08) against newest 3.1.0 (2016-07-07)
    assert report.max_lag_days == (date(2016, 7, 7) - date(2016, 1, 8)).days
    assert all(i.inclusion_class == "internal" for i in report.inclusions)


def test_inclusion_classes_and_parent_classes(cat):
    specs = [
        {"library": "jquery", "version": V("2.2.4"),
         "url": "http://cdn.example.com/jq.js"},
        {"library": "jquery", "version": V("2.2.0"),
         "url": "https://ajax.googleapis.com/jq.js"},
        {"library": "modernizr", "version": V("2.8.3"), "url": None},
    ]
    report = report_for(cat, specs)
    classes = {i.version: i.inclusion_class for i in report.inclusions}
    assert classes[str(V("2.2.4"))] == "internal"
    assert classes[str(V("2.2.0"))] == "external"
    assert classes["2.8.3"] == "inline"
    assert all(i.parent_class == "internal" for i in report.inclusions)
    assert all(i.direct_in_root for i in report.inclusions)


def test_wordpress_flag_from_library_or_next_parent(cat):
    specs = [
        {"library": "jquery", "version": V("2.2.4"),
         "url": "http://example.com/wp-content/plugins/jq.js", "node_id": "wp1"},
        {"library": "jquery", "version": V("2.2.0"),
         "url": "http://example.com/js/jq.js", "node_id": "plain"},
        # parent carries the marker, library itself does not
        {"library": "modernizr", "version": V("2.8.3"),
         "url": "http://example.com/wp-content/themes/x/loader.js",
         "node_id": "wploader"},
        {"library": "jquery", "version": V("3.1.0"),
         "url": "http://example.com/js/jq3.js", "parent": "wploader",
         "node_id": "viaparent"},
        # grandparent only: flag must stay off
        {"library": "jquery", "version": V("1.11.1"),
         "url": "http://example.com/js/jq111.js", "parent": "viaparent",
         "node_id": "grandchild"},
    ]
    report = report_for(cat, specs)
    flags = {i.node_id: i.wordpress for i in report.inclusions}
    assert flags["wp1"] is True
    assert flags["plain"] is False
    assert flags["wploader"] is True
    assert flags["viaparent"] is True
    assert flags["grandchild"] is False


def test_vulnerable_fraction_fixture_three_of_eight(cat):
    sites = [
        report_for(cat, [{"library": "jquery", "version": V("1.6.2")}], "a.com"),
        report_for(cat, [
            {"library": "jquery", "version": V("1.6.2")},
            {"library": "jquery", "version": V("1.6.2")},
            {"library": "jquery", "version": V("1.6.2")},
            {"library": "jquery", "version": V("2.2.0")},
        ], "b.com"),
        report_for(cat, [{"library": "jquery", "version": V("2.2.4")}], "c.com"),
        report_for(cat, [
            {"library": "jquery", "version": V("1.2.3")},
            {"library": "jquery", "version": V("3.1.0")},
        ], "d.com"),
        report_for(cat, [
            {"library": "jquery", "version": V("2.2.2")},
            {"library": "jquery", "version": V("2.2.0")},
        ], "e.com"),
    ]
    cell = library_vulnerable_fraction(sites, "jquery", "all")
    # oracle: brute-force count of per-site distinct pairs
    pairs = vuln = 0
    for s in sites:
        seen: dict[str, bool] = {}
        for i in s.inclusions:
            if i.library_id == "jquery":
                seen[i.version] = seen.get(i.version, False) or i.vulnerable
        pairs += len(seen)
        vuln += sum(seen.values())
    assert (vuln, pairs) == (3, 8)
    assert cell.fraction == pytest.approx(0.375)


def test_vulnerable_fraction_all_clean_is_zero(cat):
    sites = [report_for(cat, [{"library": "modernizr", "version": V("3.3.1")}])]
    assert library_vulnerable_fraction(sites, "modernizr", "all").fraction == 0.0


def test_vulnerable_fraction_empty_denominator_is_undefined(cat):
    sites = [report_for(cat, [{"library": "jquery", "version": V("1.6.2")}])]
    cell = library_vulnerable_fraction(sites, "jquery", "inline")
    assert cell.denominator == 0
    assert cell.fraction is None


def test_fraction_cell_flags():
    assert FractionCell(5, 9).omitted
    assert not FractionCell(5, 10).omitted
    assert FractionCell(99, 200).low_confidence
    assert not FractionCell(100, 200).low_confidence


def test_lag_report_all_on_newest(cat):
    sites = [
        report_for(cat, [{"library": "jquery", "version": V("3.1.0")}], "a.com"),
        report_for(cat, [{"library": "modernizr", "version": V("3.3.1")}], "b.com"),
    ]
    rep = lag_report(sites)
    assert all(v == 0 for v in rep.percentiles.values())
    assert rep.fraction_patch_behind == 0.0


def test_lag_report_single_site_median_1177(cat):
    sites = [report_for(cat, [{"library": "medianlib", "version": V("1.0.0")}])]
    rep = lag_report(sites)
    assert rep.percentiles[50] == 1177


def test_lag_report_percentiles_match_sort_and_index_oracle(cat):
    rng = random.Random(99)
    versions = ["1.2.0", "1.6.2", "2.2.0", "2.2.2", "2.2.4", "3.1.0"]
    sites = [
        report_for(
            cat,
            [{"library": "jquery", "version": V(rng.choice(versions))}
             for _ in range(rng.randint(1, 4))],
            f"site{i}.com",
        )
        for i in range(37)
    ]
    rep = lag_report(sites)
    lags = sorted(max(i.lag_days for i in s.inclusions) for s in sites)
    for q, got in rep.percentiles.items():
        expected = lags[max(0, math.ceil(q / 100 * len(lags)) - 1)]
        assert got == expected
        # defining property of a percentile
        assert sum(1 for x in lags if x <= got) >= q / 100 * len(lags)


def test_percentile_nearest_rank_basics():
    assert percentile([], 50) is None
    assert percentile([7], 5) == 7
    assert percentile([1, 2, 3, 4], 50) == 2
    assert percentile([1, 2, 3, 4], 95) == 4


ALIAS_URL = "https://ajax.googleapis.com/ajax/libs/jquery/1.2/jquery.min.js"


def test_aliasing_prefix_resolves_newer(cat):
    tree = make_tree_with_detections(
        [{"library": "jquery", "version": V("1.2.3"), "url": ALIAS_URL}]
    )
    findings = detect_version_aliasing(tree, cat)
    assert len(findings) == 1
    f = findings[0]
    assert f.url_version_prefix == "1.2"
    assert str(f.resolved_version) == "1.2.3"
    # the whole 1.2 branch is vulnerable here, so nothing is avoided
    assert f.avoids_vulnerability is False


def test_aliasing_full_version_in_url_is_not_aliasing(cat):
    url = "https://ajax.googleapis.com/ajax/libs/jquery/1.2.3/jquery.min.js"
    tree = make_tree_with_detections(
        [{"library": "jquery", "version": V("1.2.3"), "url": url}]
    )
    assert detect_version_aliasing(tree, cat) == []


def test_aliasing_zero_extension_boundary(cat):
    tree = make_tree_with_detections(
        [{"library": "jquery", "version": V("1.2.0"), "url": ALIAS_URL}]
    )
    assert detect_version_aliasing(tree, cat) == []


def test_aliasing_avoids_vulnerability_when_resolution_is_clean(cat):
    url = "https://cdn.example.net/libs/remlib/1.2/remlib.min.js"
    tree = make_tree_with_detections(
        [{"library": "remlib", "version": V("1.2.3"), "url": url}]
    )
    findings = detect_version_aliasing(tree, cat)
    assert len(findings) == 1
    assert findings[0].avoids_vulnerability is True


def test_aliasing_at_most_one_finding_per_library(cat):
    tree = make_tree_with_detections(
        [
            {"library": "jquery", "version": V("1.2.3"), "url": ALIAS_URL},
            {"library": "jquery", "version": V("1.2.3"), "url": ALIAS_URL},
        ]
    )
    assert len(detect_version_aliasing(tree, cat)) == 1


def test_aliasing_cdn_allowlist(cat):
    tree = make_tree_with_detections(
        [{"library": "jquery", "version": V("1.2.3"), "url": ALIAS_URL}]
    )
    assert detect_version_aliasing(tree, cat, cdn_hosts={"googleapis.com"})
    assert detect_version_aliasing(tree, cat, cdn_hosts={"cdn.example.org"}) == []


def test_aliasing_single_component_prefix(cat):
    url = "https://cdn.example.net/libs/remlib/1/remlib.min.js"
    tree = make_tree_with_detections(
        [{"library": "remlib", "version": V("1.2.3"), "url": url}]
    )
    findings = detect_version_aliasing(tree, cat)
    assert len(findings) == 1
    assert findings[0].url_version_prefix == "1"
    assert zero_extend("1") == V("1.0.0")


def test_remediation_patch_fix_exists(cat):
    report = report_for(cat, [{"library": "remlib", "version": V("1.2.0")}])
    assert report.vulnerable_distinct_versions == 1
    assert remediation_check(report, cat) is True
    assert report.remediable_by_patch is True


def test_remediation_branch_has_no_fix(cat):
    report = report_for(cat, [{"library": "stucklib", "version": V("1.2.0")}])
    assert remediation_check(report, cat) is False
    assert report.remediable_by_patch is False


def test_remediation_vacuous_without_vulnerable_inclusions(cat):
    report = report_for(cat, [{"library": "modernizr", "version": V("3.3.1")}])
    assert remediation_check(report, cat) is True


def test_remediation_requires_every_library_fixable(cat):
    report = report_for(cat, [
        {"library": "remlib", "version": V("1.2.0")},
        {"library": "stucklib", "version": V("1.2.0")},
    ])
    assert remediation_check(report, cat) is False


def test_remediation_monotone_under_added_clean_release(cat):
    from conftest import catalogue_lines, catalogue_records
    from weblibs.catalogue import load_catalogue

    # a clean higher-patch release added to the catalogue never flips
    # remediable true -> false
    fixable = report_for(cat, [{"library": "remlib", "version": V("1.2.0")}])
    assert remediation_check(fixable, cat) is True
    recs = catalogue_records()
    recs.append({"kind": "release", "library": "remlib", "version": "1.2.4",
                 "date": "2016-02-01"})
    richer = load_catalogue(catalogue_lines(recs))
    assert remediation_check(fixable, richer) is True

    # and it can flip false -> true once the new release escapes the range
    stuck = report_for(cat, [{"library": "stucklib", "version": V("1.2.0")}])
    assert remediation_check(stuck, cat) is False
    recs = catalogue_records()
    recs.append({"kind": "release", "library": "stucklib", "version": "1.2.9",
                 "date": "2016-01-01"})
    still_vulnerable = load_catalogue(catalogue_lines(recs))
    # 1.2.9 sits inside the vulnerable range [1.2.0, 1.3.0): nothing changes
    assert remediation_check(stuck, still_vulnerable) is False
    recs = [r for r in recs if r.get("id") != "stuck-hole"]
    recs.append({"kind": "vuln", "library": "stucklib", "id": "narrow",
                 "low": "1.2.0", "high": "1.2.1"})
    fixed = load_catalogue(catalogue_lines(recs))
    assert remediation_check(stuck, fixed) is True


def test_risk_breakdown_separable_ad_fixture(cat):
    sites = [
        report_for(cat, [
            {"library": "jquery", "version": V("1.6.2"), "labels": ("ad",)},
        ], "ads-site.com"),
        report_for(cat, [
            {"library": "jquery", "version": V("2.2.4")},
        ], "clean-site.com"),
    ]
    corpus = risk_breakdown(sites)
    ad_cell = corpus.vulnerable_fractions["ad-widget-tracker"]["jquery"]
    noad_cell = corpus.vulnerable_fractions["no-ad-widget-tracker"]["jquery"]
    assert ad_cell.fraction == 1.0
    assert noad_cell.fraction == 0.0


def test_risk_breakdown_wordpress_row(cat):
    sites = [
        report_for(cat, [
            {"library": "jquery", "version": V("2.2.4"),
             "url": "http://example.com/wp-content/plugins/slider/jq.js"},
        ]),
    ]
    corpus = risk_breakdown(sites)
    assert corpus.vulnerable_fractions["wordpress"]["jquery"].denominator == 1
    assert corpus.vulnerable_fractions["non-wordpress"]["jquery"].denominator == 0


def test_risk_breakdown_threshold_flags(cat):
    sites = [
        report_for(cat, [{"library": "jquery", "version": V("1.6.2")}], f"s{i}.com")
        for i in range(9)
    ]
    corpus = risk_breakdown(sites)
    cell = corpus.vulnerable_fractions["all"]["jquery"]
    assert cell.denominator == 9
    assert cell.omitted  # below the 10-inclusion display threshold
    assert cell.low_confidence  # below 100 vulnerable inclusions


def test_risk_breakdown_matches_brute_force_recount(cat):
    rng = random.Random(5)
    libraries = ["jquery", "angular", "remlib", "modernizr"]
    versions = {
        "jquery": ["1.2.3", "1.6.2", "2.2.0", "3.1.0"],
        "angular": ["1.2.0", "1.3.0", "1.4.0"],
        "remlib": ["1.2.0", "1.2.3"],
        "modernizr": ["2.8.3", "3.3.1"],
    }
    def url_pool(domain):
        return [
            None,
            f"http://{domain}/js/a.js",
            f"http://cdn.{domain}/b.js",
            "https://ajax.googleapis.com/c.js",
            f"http://{domain}/wp-content/d.js",
            "http://static.thirdparty.net/wp-content/e.js",
        ]

    label_pool = [(), ("ad",), ("tracker", "widget")]
    sites = []
    raw_specs: dict[str, list[dict]] = {}
    for i in range(30):
        domain = f"site{i}.example"
        specs = []
        for _ in range(rng.randint(0, 5)):
            lib = rng.choice(libraries)
            specs.append({
                "library": lib,
                "version": V(rng.choice(versions[lib])),
                "url": rng.choice(url_pool(domain)),
                "labels": rng.choice(label_pool),
            })
        raw_specs[domain] = specs
        sites.append(report_for(cat, specs, domain))
    corpus = risk_breakdown(sites)

    # independent recount from the raw specs
    def classify(url, domain):
        if url is None:
            return "inline"
        host = urlsplit(url).hostname
        if host and (host == domain or host.endswith("." + domain)):
            return "internal"
        return "external"

    recount_filters = {
        "all": lambda s, d: True,
        "internal": lambda s, d: classify(s["url"], d) == "internal",
        "external": lambda s, d: classify(s["url"], d) == "external",
        "inline": lambda s, d: classify(s["url"], d) == "inline",
        "wordpress": lambda s, d: bool(s["url"]) and "/wp-content/" in s["url"],
        "ad-widget-tracker": lambda s, d: bool(s["labels"]),
        "no-ad-widget-tracker": lambda s, d: not s["labels"],
    }
    for fname, predicate in recount_filters.items():
        for lib in corpus.libraries:
            total = vuln = 0
            for domain, specs in raw_specs.items():
                pairs: dict[str, bool] = {}
                for s in specs:
                    if s["library"] != lib or not predicate(s, domain):
                        continue
                    is_vuln = bool(cat.vulnerabilities_for(lib, s["version"]))
                    key = str(s["version"])
                    pairs[key] = pairs.get(key, False) or is_vuln
                total += len(pairs)
                vuln += sum(pairs.values())
            cell = corpus.vulnerable_fractions[fname][lib]
            assert (cell.numerator, cell.denominator) == (vuln, total), (fname, lib)


def test_host_shares_count_each_hostname_once_per_site(cat):
    sites = [
        report_for(cat, [
            {"library": "jquery", "version": V("2.2.4"),
             "url": "https://ajax.googleapis.com/a.js"},
            {"library": "jquery", "version": V("2.2.0"),
             "url": "https://ajax.googleapis.com/b.js"},
        ], "one.com"),
        report_for(cat, [
            {"library": "jquery", "version": V("2.2.4"),
             "url": "https://ajax.googleapis.com/a.js"},
            {"library": "modernizr", "version": V("2.8.3"),
             "url": "https://cdn.other.net/m.js"},
        ], "two.com"),
    ]
    corpus = risk_breakdown(sites)
    shares = {s.hostname: s for s in corpus.host_shares_libraries}
    assert shares["ajax.googleapis.com"].sites == 2  # not 3: per-site dedup
    assert shares["cdn.other.net"].sites == 1
    total = sum(s.share for s in corpus.host_shares_libraries)
    assert total == pytest.approx(1.0)
    # subdomains are not grouped
    assert "googleapis.com" not in shares


spec_strategy = st.fixed_dictionaries(
    {
        "library": st.sampled_from(["jquery", "angular", "remlib", "modernizr"]),
        "version": st.sampled_from(
            ["1.2.0", "1.2.3", "1.6.2", "2.2.0", "2.8.3", "3.1.0"]
        ).map(V),
        "url": st.sampled_from(
            [
                None,
                "http://example.com/js/a.js",
                "http://cdn.example.com/b.js",
                "https://ajax.googleapis.com/c.js",
                "http://x.org/wp-content/d.js",
            ]
        ),
        "labels": st.sets(
            st.sampled_from(["ad", "tracker", "widget"]), max_size=2
        ).map(tuple),
    }
)


@settings(max_examples=120, deadline=None)
@given(specs=st.lists(spec_strategy, min_size=1, max_size=8), data=st.data())
def test_dedup_law_duplicating_an_inclusion_changes_nothing(cat, specs, data):
    index = data.draw(st.integers(min_value=0, max_value=len(specs) - 1))
    base = site_report(make_tree_with_detections(specs), cat)
    duplicated = specs + [dict(specs[index], node_id="dup-node")]
    dup = site_report(make_tree_with_detections(duplicated), cat)
    assert dup.vulnerable_distinct_versions == base.vulnerable_distinct_versions
    for fname in INCLUSION_FILTERS:
        for lib in {s["library"] for s in specs}:
            before = library_vulnerable_fraction([base], lib, fname)
            after = library_vulnerable_fraction([dup], lib, fname)
            assert (before.numerator, before.denominator) == (
                after.numerator, after.denominator,
            ), (fname, lib)
