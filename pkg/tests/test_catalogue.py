"""Catalogue loading, range membership, newest/branch/lag queries."""

from __future__ import annotations

import json
import random
from datetime import date, timedelta

import pytest

from weblibs.catalogue import (
    MIN_MATCHABLE_BYTES,
    CatalogueError,
    load_catalogue,
)
from weblibs.semver import SemVer, parse_version

from conftest import catalogue_lines, catalogue_records


def brute_force_vulnerable(cat, library_id, v):
    """Independent membership check: test every record's bounds one by one."""
    hits = []
    for rec in cat.vulnerabilities:
        if rec.library_id != library_id:
            continue
        if rec.kind == "at_most":
            inside = not (v > rec.at_most_version)
        else:
            inside = v < rec.range_high and (
                rec.range_low is None or not (v < rec.range_low)
            )
        if inside:
            hits.append(rec.vuln_id)
    return sorted(hits)


def test_before_bound_is_exclusive(cat):
    assert cat.vulnerabilities_for("jquery", parse_version("1.6.2"))
    assert cat.vulnerabilities_for("jquery", parse_version("1.6.3")) == []


def test_angular_120_has_five_known_vulnerabilities(cat):
    records = cat.vulnerabilities_for("angular", parse_version("1.2.0"))
    assert len(records) == 5
    assert len({r.vuln_id for r in records}) == 5


def test_vulnerabilities_for_unknown_library(cat):
    with pytest.raises(CatalogueError):
        cat.vulnerabilities_for("nosuchlib", parse_version("1.0.0"))


def test_vulnerabilities_agree_with_brute_force_on_fixture(cat):
    for rel in cat.releases:
        got = sorted(r.vuln_id for r in cat.vulnerabilities_for(rel.library_id, rel.version))
        assert got == brute_force_vulnerable(cat, rel.library_id, rel.version)


def test_newest_release_is_max_by_version(cat):
    assert str(cat.newest_release("jquery").version) == "3.1.0"
    assert str(cat.newest_release("handlebars").version) == "4.0.5"


def test_newest_release_tie_break_with_extra():
    lines = [
        json.dumps({"kind": "library", "id": "lib"}),
        json.dumps({"kind": "release", "library": "lib", "version": "1.9.1",
                    "date": "2013-02-04"}),
        json.dumps({"kind": "release", "library": "lib", "version": "2.0.0-beta",
                    "date": "2013-03-01"}),
        json.dumps({"kind": "release", "library": "lib", "version": "2.0.0",
                    "date": "2013-04-18"}),
    ]
    cat2 = load_catalogue(lines)
    # oracle: brute-force max under the documented ordering
    expected = None
    for rel in cat2.releases:
        if expected is None or rel.version > expected:
            expected = rel.version
    assert expected == SemVer(2, 0, 0)
    assert cat2.newest_release("lib").version == expected


def test_newest_release_errors(cat):
    with pytest.raises(CatalogueError):
        cat.newest_release("nosuchlib")


def test_latest_in_patch_branch(cat):
    assert str(cat.latest_in_patch_branch("remlib", parse_version("1.2.0"))) == "1.2.3"
    assert str(cat.latest_in_patch_branch("remlib", parse_version("1.3.0"))) == "1.3.0"
    with pytest.raises(CatalogueError):
        cat.latest_in_patch_branch("remlib", parse_version("9.9.0"))


def test_latest_in_patch_branch_many_branches():
    rng = random.Random(7)
    releases = []
    day = date(2014, 1, 1)
    for major, minor in [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (3, 0)]:
        for patch in range(rng.randint(1, 5)):
            releases.append((SemVer(major, minor, patch), day))
            day += timedelta(days=17)
    lines = [json.dumps({"kind": "library", "id": "lib"})]
    lines += [
        json.dumps({"kind": "release", "library": "lib", "version": str(v),
                    "date": d.isoformat()})
        for v, d in releases
    ]
    cat2 = load_catalogue(lines)
    # oracle: per-branch maximum by linear scan
    expected: dict[tuple[int, int], SemVer] = {}
    for v, _ in releases:
        key = (v.major, v.minor)
        if key not in expected or v > expected[key]:
            expected[key] = v
    for v, _ in releases:
        got = cat2.latest_in_patch_branch("lib", v)
        assert got == expected[(v.major, v.minor)]
        assert got >= v and got.branch == v.branch


def test_lag_days_fixture_pair(cat):
    # 2013-01-01 -> 2016-03-25, verified independently via datetime arithmetic
    assert (date(2016, 3, 25) - date(2013, 1, 1)).days == 1179
    assert cat.lag_days("handlebars", parse_version("1.0.0")) == 1179


def test_lag_days_newest_is_zero(cat):
    for lib in sorted(cat.library_ids):
        newest = cat.newest_release(lib)
        assert cat.lag_days(lib, newest.version) == 0


def test_lag_days_clamped_for_rereleased_branch():
    lines = [
        json.dumps({"kind": "library", "id": "lib"}),
        json.dumps({"kind": "release", "library": "lib", "version": "2.0.0",
                    "date": "2015-01-01"}),
        # old branch re-released after the 2.0.0 line
        json.dumps({"kind": "release", "library": "lib", "version": "1.9.9",
                    "date": "2015-06-01"}),
    ]
    cat2 = load_catalogue(lines)
    assert cat2.lag_days("lib", parse_version("1.9.9")) == 0


def test_lag_days_unknown_version_errors(cat):
    with pytest.raises(CatalogueError):
        cat.lag_days("jquery", parse_version("9.9.9"))


def test_load_catalogue_roundtrip(cat):
    assert cat.library_ids == {
        "jquery", "angular", "handlebars", "medianlib", "modernizr",
        "remlib", "stucklib",
    }
    assert cat.dropped_small_files == 0


def test_load_catalogue_drops_small_reference_files():
    recs = catalogue_records()
    recs.append({
        "kind": "reffile", "library": "jquery", "version": "1.6.2",
        "variant": "other", "bytes": MIN_MATCHABLE_BYTES - 1, "sha256": "ab" * 32,
    })
    cat2 = load_catalogue(catalogue_lines(recs))
    assert cat2.dropped_small_files == 1
    assert cat2.reference_for_digest("ab" * 32) is None


def test_load_catalogue_size_floor_boundary():
    recs = catalogue_records()
    recs.append({
        "kind": "reffile", "library": "jquery", "version": "1.6.2",
        "variant": "other", "bytes": MIN_MATCHABLE_BYTES, "sha256": "cd" * 32,
    })
    cat2 = load_catalogue(catalogue_lines(recs))
    assert cat2.dropped_small_files == 0
    assert cat2.reference_for_digest("cd" * 32) is not None


def test_load_catalogue_rejects_empty_range():
    recs = catalogue_records()
    recs.append({"kind": "vuln", "library": "jquery", "id": "bad",
                 "low": "2.0.0", "high": "1.0.0"})
    with pytest.raises(CatalogueError) as exc:
        load_catalogue(catalogue_lines(recs))
    assert "line" in str(exc.value)


def test_load_catalogue_rejects_unknown_library_reference():
    recs = catalogue_records()
    recs.append({"kind": "vuln", "library": "ghost", "id": "g1", "high": "1.0.0"})
    with pytest.raises(CatalogueError):
        load_catalogue(catalogue_lines(recs))


def test_load_catalogue_rejects_reffile_without_release():
    recs = catalogue_records()
    recs.append({"kind": "reffile", "library": "jquery", "version": "8.8.8",
                 "variant": "full", "bytes": 5000, "sha256": "ef" * 32})
    with pytest.raises(CatalogueError) as exc:
        load_catalogue(catalogue_lines(recs))
    assert "8.8.8" in str(exc.value)


def test_load_catalogue_rejects_duplicate_digest():
    recs = catalogue_records()
    dup = next(r for r in recs if r["kind"] == "reffile")
    extra = dict(dup)
    extra["version"] = "1.6.2" if dup["version"] != "1.6.2" else "1.2.3"
    recs.append(extra)
    with pytest.raises(CatalogueError):
        load_catalogue(catalogue_lines(recs))


def test_load_catalogue_names_first_offending_line():
    lines = [
        json.dumps({"kind": "library", "id": "lib"}),
        "not json at all {",
    ]
    with pytest.raises(CatalogueError) as exc:
        load_catalogue(lines)
    assert str(exc.value).startswith("line 2:")


def test_patch_lag_counts_newer_releases_in_branch(cat):
    assert cat.patch_lag("remlib", parse_version("1.2.0")) == 1
    assert cat.patch_lag("remlib", parse_version("1.2.3")) == 0
    assert cat.patch_lag("jquery", parse_version("1.2.0")) == 1  # 1.2.3 is newer
