"""Acceptance suite: fixture-anchored and property-based exit criteria.

Each test prints one PASS/FAIL line (run with ``pytest -s`` to see them all)
and carries its runtime budget as an assertion where one is specified.
"""

from __future__ import annotations

import contextlib
import json
import random
import time
from datetime import date, timedelta

from weblibs.analysis import (
    INCLUSION_FILTERS,
    attach_detections,
    detect_version_aliasing,
    library_vulnerable_fraction,
    site_report,
)
from weblibs.catalogue import MIN_MATCHABLE_BYTES, load_catalogue
from weblibs.causality import build_tree, classify_inclusion, CausalityNode, tree_metrics
from weblibs.detection import ScriptSample, static_detect
from weblibs.filterlist import parse_rule, url_matches, MatchContext
from weblibs.semver import SemVer, parse_version

from conftest import (
    catalogue_lines,
    events_from_records,
    make_tree_with_detections,
    msgov_event_records,
    ref_digest,
)
from filter_oracle import corpus_contexts, corpus_rule_lines, oracle_matches
from treegen import (
    assert_tree_laws,
    brute_force_depth,
    random_event_records,
    tree_shape,
)

V = parse_version


@contextlib.contextmanager
def criterion(name: str):
    try:
        yield
    except BaseException:
        print(f"FAIL {name}")
        raise
    print(f"PASS {name}")


def test_vulnerability_range_semantics(cat):
    with criterion("vulnerability-range-semantics"):
        started = time.time()
        assert cat.vulnerabilities_for("jquery", V("1.6.2"))
        assert cat.vulnerabilities_for("jquery", V("1.6.3")) == []

        # 200-release fixture with assorted range and at_most records
        rng = random.Random(2016)
        lines = [json.dumps({"kind": "library", "id": "biglib"})]
        release_versions = []
        day = date(2010, 1, 1)
        while len(release_versions) < 200:
            v = SemVer(rng.randint(0, 4), rng.randint(0, 6), rng.randint(0, 9))
            if v in release_versions:
                continue
            release_versions.append(v)
            lines.append(json.dumps({
                "kind": "release", "library": "biglib", "version": str(v),
                "date": day.isoformat(),
            }))
            day += timedelta(days=rng.randint(1, 11))
        for i in range(14):
            if i % 3 == 0:
                bound = rng.choice(release_versions)
                lines.append(json.dumps({
                    "kind": "vuln", "library": "biglib", "id": f"am{i}",
                    "at_most": str(bound),
                }))
            else:
                low, high = sorted(rng.sample(release_versions, 2))
                if low == high:
                    continue
                rec = {"kind": "vuln", "library": "biglib", "id": f"rg{i}",
                       "high": str(high)}
                if i % 2 == 0:
                    rec["low"] = str(low)
                lines.append(json.dumps(rec))
        big = load_catalogue(lines)
        assert len(big.releases) == 200

        # brute-force oracle: enumerate releases, test membership one by one
        for rel in big.releases:
            expected = []
            for rec in big.vulnerabilities:
                if rec.kind == "at_most":
                    inside = not (rel.version > rec.at_most_version)
                else:
                    above_low = rec.range_low is None or not (rel.version < rec.range_low)
                    inside = above_low and rel.version < rec.range_high
                if inside:
                    expected.append(rec.vuln_id)
            got = [r.vuln_id for r in big.vulnerabilities_for("biglib", rel.version)]
            assert sorted(got) == sorted(expected), str(rel.version)
        assert time.time() - started < 1.0


def test_fig2_anchor_angular_120_has_five_vulnerabilities(cat):
    with criterion("angular-1.2.0-five-vulnerabilities"):
        records = cat.vulnerabilities_for("angular", V("1.2.0"))
        assert len(records) == 5


def test_size_floor_exact_boundary(cat):
    with criterion("996-byte-size-floor"):
        recs_996 = catalogue_lines() + [json.dumps({
            "kind": "reffile", "library": "jquery", "version": "1.6.2",
            "variant": "other", "bytes": 996, "sha256": "aa" * 32,
        })]
        accepted = load_catalogue(recs_996)
        assert accepted.dropped_small_files == 0
        assert accepted.reference_for_digest("aa" * 32) is not None

        recs_995 = catalogue_lines() + [json.dumps({
            "kind": "reffile", "library": "jquery", "version": "1.6.2",
            "variant": "other", "bytes": 995, "sha256": "bb" * 32,
        })]
        rejected = load_catalogue(recs_995)
        assert rejected.dropped_small_files == 1
        assert rejected.reference_for_digest("bb" * 32) is None

        # static detection honours the same boundary on the sample side
        digest = ref_digest("jquery", "1.11.1")
        assert static_detect(ScriptSample("n", 995, digest), cat) is None
        sample_996 = ScriptSample("n", MIN_MATCHABLE_BYTES, digest)
        assert static_detect(sample_996, cat) is not None


def test_msgov_fixture(cat):
    with criterion("msgov-duplicate-inclusions"):
        started = time.time()
        tree = build_tree(events_from_records(msgov_event_records()), "ms.gov")
        attach_detections(tree, cat)
        detected_scripts = [n for n in tree.script_nodes() if n.detections]
        assert len(detected_scripts) == 13

        report = site_report(tree, cat)
        jq = next(d for d in report.duplicates if d.library_id == "jquery")
        assert jq.by_version == {"2.2.0": 12, "2.2.2": 1}
        assert jq.same_version_duplicate is True
        assert jq.distinct_versions == 2
        assert sum(1 for i in report.inclusions if i.direct_in_root) == 1
        assert time.time() - started < 1.0


def test_aliasing_criterion(cat):
    with criterion("version-aliasing"):
        url = "https://ajax.googleapis.com/ajax/libs/jquery/1.2/jquery.min.js"
        aliased = make_tree_with_detections(
            [{"library": "jquery", "version": V("1.2.3"), "url": url}]
        )
        findings = detect_version_aliasing(aliased, cat)
        assert len(findings) == 1
        assert findings[0].url_version_prefix == "1.2"
        assert str(findings[0].resolved_version) == "1.2.3"

        exact = make_tree_with_detections(
            [{"library": "jquery", "version": V("1.2.0"), "url": url}]
        )
        assert detect_version_aliasing(exact, cat) == []


def test_remediation_criterion(cat):
    with criterion("patch-level-remediation"):
        fixable = site_report(
            make_tree_with_detections(
                [{"library": "remlib", "version": V("1.2.0")}]
            ),
            cat,
        )
        assert fixable.vulnerable_distinct_versions == 1
        assert fixable.remediable_by_patch is True

        stuck = site_report(
            make_tree_with_detections(
                [{"library": "stucklib", "version": V("1.2.0")}]
            ),
            cat,
        )
        assert stuck.vulnerable_distinct_versions == 1
        assert stuck.remediable_by_patch is False


def test_tree_laws_on_1000_random_logs():
    with criterion("tree-laws-1000-random-logs"):
        started = time.time()
        for seed in range(1000):
            rng = random.Random(seed)
            records = random_event_records(rng, 200)
            tree = build_tree(events_from_records(records), "example.com")
            assert_tree_laws(tree)
            assert tree_metrics(tree).depth == brute_force_depth(tree)
            replay = build_tree(events_from_records(records), "example.com")
            assert tree_shape(tree) == tree_shape(replay)
        elapsed = time.time() - started
        assert elapsed < 30.0, f"took {elapsed:.1f}s"


def test_filter_matching_against_oracle_corpus():
    with criterion("filter-matching-oracle-agreement"):
        started = time.time()
        rng = random.Random(20170226)
        rules = []
        for line in corpus_rule_lines(rng, 600):
            try:
                rules.append(parse_rule(line, "ad"))
            except Exception:
                continue
        rules = rules[:500]
        assert len(rules) == 500
        contexts = corpus_contexts(rng, 2000)
        disagreements = 0
        for rule in rules:
            for ctx in contexts:
                if url_matches(rule, ctx) != oracle_matches(rule, ctx):
                    disagreements += 1
        assert disagreements == 0

        ga = parse_rule("||google-analytics.com^", "tracker")
        hit = MatchContext("https://www.google-analytics.com/analytics.js",
                           "example.com", "script", True)
        miss = MatchContext("https://nongoogle-analytics.com/x.js",
                            "example.com", "script", True)
        assert url_matches(ga, hit) is True
        assert url_matches(ga, miss) is False
        elapsed = time.time() - started
        assert elapsed < 10.0, f"took {elapsed:.1f}s"


def test_dedup_law_criterion(cat):
    with criterion("per-site-version-pair-dedup"):
        rng = random.Random(42)
        libraries = ["jquery", "angular", "remlib", "modernizr"]
        versions = ["1.2.0", "1.2.3", "1.6.2", "2.2.0", "2.8.3", "3.1.0"]
        urls = [None, "http://example.com/a.js", "https://cdn.third.net/b.js"]
        for trial in range(60):
            specs = [
                {
                    "library": rng.choice(libraries),
                    "version": V(rng.choice(versions)),
                    "url": rng.choice(urls),
                    "labels": rng.choice([(), ("ad",), ("widget",)]),
                }
                for _ in range(rng.randint(1, 6))
            ]
            base = site_report(make_tree_with_detections(specs), cat)
            clone = dict(specs[rng.randrange(len(specs))], node_id="dup")
            dup = site_report(make_tree_with_detections(specs + [clone]), cat)
            assert dup.vulnerable_distinct_versions == base.vulnerable_distinct_versions
            for fname in INCLUSION_FILTERS:
                for lib in libraries:
                    a = library_vulnerable_fraction([base], lib, fname)
                    b = library_vulnerable_fraction([dup], lib, fname)
                    assert (a.numerator, a.denominator) == (b.numerator, b.denominator)


def test_internal_external_dot_boundary_table():
    with criterion("internal-external-dot-boundary"):
        site = "example.com"
        cases: list[tuple[str | None, str]] = [(None, "inline")]
        # generated suffix-trap table: 99 URL cases + the inline one
        hosts_internal = (
            ["example.com", "www.example.com", "cdn.example.com", "a.b.example.com",
             "EXAMPLE.COM", "sub.EXAMPLE.com"]
            + [f"s{i}.example.com" for i in range(20)]
            + [f"deep{i}.lvl.example.com" for i in range(10)]
        )
        hosts_external = (
            ["notexample.com", "anexample.com", "example.com.evil.net",
             "example.org", "examplea.com", "xexample.com", "com", "example",
             "example-com.net", "fooexample.com"]
            + [f"not{i}example.com" for i in range(20)]
            + [f"example{i}.com" for i in range(20)]
            + [f"x{i}.notexample.com" for i in range(13)]
        )
        for host in hosts_internal:
            cases.append((f"http://{host}/x.js", "internal"))
        for host in hosts_external:
            cases.append((f"http://{host}/x.js", "external"))
        assert len(cases) == 100
        for url, expected in cases:
            node = CausalityNode(
                "n", "n", "script_url" if url else "script_inline",
                url, "f0", None,
            )
            assert classify_inclusion(node, site) == expected, url
