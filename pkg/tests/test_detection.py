"""Static hash detection, probe output parsing, evidence merging and the
name-in-URL comparison heuristic."""

from __future__ import annotations

from collections import Counter

import pytest

from weblibs.detection import (
    Detection,
    ProbeResult,
    ProbeSpec,
    ScriptSample,
    heuristic_partition,
    merge_detections,
    name_in_url_heuristic,
    parse_probe_output,
    static_detect,
)
from weblibs.semver import parse_version

from conftest import digest_of, ref_digest, script_bytes


def sample_for(library, version, node_id="s1", variant="minified"):
    data = script_bytes(library, version, variant)
    return ScriptSample(node_id=node_id, bytes_length=len(data), digest=digest_of(data))


def test_static_detect_exact_fixture_match(cat):
    det = static_detect(sample_for("jquery", "1.11.1"), cat)
    assert det == Detection("s1", "jquery", parse_version("1.11.1"), "static")


def test_static_detect_hash_avalanche(cat):
    data = bytearray(script_bytes("jquery", "1.11.1"))
    data[10] ^= 0x01  # one comment character changed
    sample = ScriptSample("s1", len(data), digest_of(bytes(data)))
    assert static_detect(sample, cat) is None


def test_static_detect_size_filtered(cat):
    sample = ScriptSample("s1", 500, digest_of(b"tiny"))
    assert static_detect(sample, cat) is None


def test_static_detect_size_filter_beats_digest_match(cat):
    # even a matching digest is ignored below the floor
    sample = ScriptSample("s1", 995, ref_digest("jquery", "1.11.1"))
    assert static_detect(sample, cat) is None


def test_static_detect_deterministic_and_injective_on_fixtures(cat):
    seen = {}
    for i, rf in enumerate(cat.reference_files):
        sample = ScriptSample(f"n{i}", rf.byte_length, rf.digest)
        first = static_detect(sample, cat)
        second = static_detect(sample, cat)
        assert first == second
        assert first is not None
        assert first not in seen.values()
        seen[rf.digest] = first


def test_inline_sample_rejects_url():
    with pytest.raises(ValueError):
        ScriptSample("s", 1000, "ab" * 32, url="http://x/y.js", inline=True)


def test_parse_probe_output_well_formed():
    raw = ProbeResult("f1", "jquery", "3.1.0", "s17", 4000)
    det = parse_probe_output(raw)
    assert det == Detection("s17", "jquery", parse_version("3.1.0"), "dynamic")


def test_parse_probe_output_missing_version_counted():
    counts = Counter()
    raw = ProbeResult("f1", "jquery", None, "s17")
    assert parse_probe_output(raw, counts) is None
    assert counts["missing-version"] == 1


def test_parse_probe_output_invalid_version_counted():
    counts = Counter()
    raw = ProbeResult("f1", "jquery", "latest", "s17")
    assert parse_probe_output(raw, counts) is None
    assert counts["invalid-version"] == 1


def test_parse_probe_output_unattributed_counted():
    counts = Counter()
    raw = ProbeResult("f1", "jquery", "3.1.0", None)
    assert parse_probe_output(raw, counts) is None
    assert counts["unattributed-node"] == 1


def test_merge_agreeing_versions_become_both():
    v = parse_version("1.11.1")
    merged = merge_detections(
        [Detection("s1", "jquery", v, "static")],
        [Detection("s1", "jquery", v, "dynamic")],
    )
    assert merged == [Detection("s1", "jquery", v, "both")]


def test_merge_dynamic_only_passes_through():
    det = Detection("s2", "angular", parse_version("1.2.0"), "dynamic")
    assert merge_detections([], [det]) == [det]


def test_merge_conflicting_versions_kept_and_flagged():
    statics = [Detection("s1", "jquery", parse_version("1.11.1"), "static")]
    dynamics = [Detection("s1", "jquery", parse_version("1.11.3"), "dynamic")]
    merged = merge_detections(statics, dynamics)
    assert len(merged) == 2
    assert all(d.conflict for d in merged)
    assert {str(d.version) for d in merged} == {"1.11.1", "1.11.3"}


def test_merge_conflict_count_matches_brute_force_pairing():
    import random

    rng = random.Random(3)
    libraries = ["jquery", "angular"]
    statics, dynamics = [], []
    for i in range(60):
        node = f"s{rng.randint(0, 19)}"
        lib = rng.choice(libraries)
        version = parse_version(f"1.{rng.randint(0, 2)}.{rng.randint(0, 2)}")
        entry = Detection(node, lib, version, "static" if i % 2 else "dynamic")
        (statics if i % 2 else dynamics).append(entry)
    merged = merge_detections(statics, dynamics)

    # oracle: pair everything by (node, library) and count keys with >1 version
    pairs: dict[tuple[str, str], set[str]] = {}
    for d in statics + dynamics:
        pairs.setdefault((d.node_id, d.library_id), set()).add(str(d.version))
    expected_conflict_keys = {k for k, vs in pairs.items() if len(vs) > 1}
    got_conflict_keys = {(d.node_id, d.library_id) for d in merged if d.conflict}
    assert got_conflict_keys == expected_conflict_keys
    assert len(merged) <= len(statics) + len(dynamics)
    assert len(merged) == sum(len(vs) for vs in pairs.values())


def test_merge_output_sizes_bounded():
    v1 = parse_version("1.0.0")
    v2 = parse_version("2.0.0")
    statics = [Detection("a", "jquery", v1, "static")]
    dynamics = [
        Detection("a", "jquery", v1, "dynamic"),
        Detection("a", "jquery", v2, "dynamic"),
    ]
    merged = merge_detections(statics, dynamics)
    assert len(merged) == 2
    both = next(d for d in merged if d.version == v1)
    assert both.method == "both" and both.conflict


def test_name_in_url_heuristic_substring():
    assert name_in_url_heuristic("https://x.com/js/jquery.min.js", "jquery")
    # plug-in named after the library: a known heuristic false positive
    assert name_in_url_heuristic("https://x.com/js/jquery.colorbox.js", "jquery")
    # renamed copy: a known heuristic false negative
    assert not name_in_url_heuristic("https://x.com/js/app-main.js", "jquery")


def test_name_in_url_heuristic_case_insensitive_and_token(cat):
    assert name_in_url_heuristic("https://x.com/JQUERY.JS", "jquery",
                                 cat.heuristic_token("jquery"))
    assert cat.heuristic_token("modernizr") == "modernizr"


def test_name_in_url_heuristic_empty_url():
    with pytest.raises(ValueError):
        name_in_url_heuristic("", "jquery")


def test_heuristic_partition_matches_set_comparison_oracle():
    urls = {
        "s1": "https://x.com/js/jquery.min.js",
        "s2": "https://x.com/js/jquery.colorbox.js",
        "s3": "https://x.com/js/app-main.js",
        "s4": "https://cdn.example/jquery-ui.js",
        "s5": "https://x.com/js/vendor.js",
    }
    detected = {"s1", "s3"}
    both, heur_only, det_only = heuristic_partition(urls, detected, "jquery")

    # oracle: brute-force set comparison
    hits = {n for n, u in urls.items() if "jquery" in u.lower()}
    assert both == hits & detected
    assert heur_only == hits - detected
    assert det_only == detected - hits
    assert both == {"s1"}
    assert heur_only == {"s2", "s4"}
    assert det_only == {"s3"}


def test_probe_spec_requires_source():
    with pytest.raises(ValueError):
        ProbeSpec("jquery", "   ")


def test_probe_results_recover_catalogue_identity(cat):
    """For every fixture reference file, a probe hit reporting that file's
    version parses back to the catalogue's (library, version); hits without
    a version are counted misses (the controlled-experiment structure)."""
    counts = Counter()
    for i, rf in enumerate(cat.reference_files):
        raw = ProbeResult(f"f{i}", rf.library_id, str(rf.version), f"node{i}")
        det = parse_probe_output(raw, counts)
        assert det is not None
        assert (det.library_id, det.version) == (rf.library_id, rf.version)
        name_only = ProbeResult(f"f{i}", rf.library_id, None, f"node{i}")
        assert parse_probe_output(name_only, counts) is None
    assert counts["missing-version"] == len(cat.reference_files)
    assert counts["invalid-version"] == 0


def test_load_probe_specs_from_repo_directory():
    from pathlib import Path

    from weblibs.detection import load_probe_specs

    probes_dir = Path(__file__).resolve().parent.parent / "probes"
    specs = load_probe_specs(str(probes_dir))
    assert "jquery" in specs and "jquery-ui" in specs
    jq = specs["jquery"]
    assert jq.library_id == "jquery"
    # presence AND characteristic attribute guard, then the version attribute
    assert "window.jQuery" in jq.probe_source
    assert "jq.fn" in jq.probe_source
    assert "return" in jq.probe_source
    assert all(spec.probe_source.strip() for spec in specs.values())
