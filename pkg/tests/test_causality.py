"""Tree construction semantics, metrics, classification, duplicates and
label propagation."""

from __future__ import annotations

import json
import random
import statistics

import pytest

from weblibs.analysis import attach_detections
from weblibs.causality import (
    CausalityNode,
    TreeBuildError,
    build_tree,
    classify_inclusion,
    duplicate_inclusions,
    propagate_labels,
    tree_metrics,
)
from weblibs.dot import export_dot
from weblibs.events import parse_event_log

from conftest import (
    digest_of,
    events_from_records,
    msgov_event_records,
    script_bytes,
)
from treegen import (
    assert_tree_laws,
    brute_force_depth,
    random_event_records,
    tree_shape,
)


def build_from(records, site="example.com"):
    return build_tree(events_from_records(records), site)


def test_linear_chain():
    records = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
        {"seq": 2, "kind": "script_created", "frame_id": "f0", "node_id": "a",
         "url": "http://example.com/a.js"},
        {"seq": 3, "kind": "script_created", "frame_id": "f0", "node_id": "b",
         "url": "http://example.com/b.js", "initiator_node_id": "a"},
    ]
    tree = build_from(records)
    assert tree.parent_id("a") == "d0"
    assert tree.parent_id("b") == "a"
    assert tree_metrics(tree).depth == 2


def test_iframe_url_change_creates_second_document_under_initiator():
    records = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
        {"seq": 2, "kind": "script_created", "frame_id": "f0", "node_id": "s",
         "url": "http://example.com/s.js"},
        # the script creates an iframe showing U1 ...
        {"seq": 3, "kind": "document_committed", "frame_id": "f1", "node_id": "ifr",
         "url": "http://one.example/u1", "initiator_node_id": "s",
         "attached_document_node_id": "d0"},
        # ... then changes its URL to U2
        {"seq": 4, "kind": "url_changed", "frame_id": "f1", "node_id": "ifr",
         "url": "http://two.example/u2", "initiator_node_id": "s"},
    ]
    tree = build_from(records)
    script_children = tree.children_ids("s")
    assert len(script_children) == 2
    urls = [tree.nodes[c].url for c in script_children]
    assert urls == ["http://one.example/u1", "http://two.example/u2"]
    assert all(tree.nodes[c].kind == "document" for c in script_children)
    # both snapshots belong to the same iframe element
    assert {tree.nodes[c].element_id for c in script_children} == {"ifr"}


def test_top_level_redirect_chains_to_prior_document():
    records = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
        {"seq": 2, "kind": "document_committed", "frame_id": "f0", "node_id": "d1",
         "url": "http://example.com/landing"},
    ]
    tree = build_from(records)
    assert tree.parent_id("d1") == "d0"
    assert tree.root_id == "d0"


def test_msgov_structure(cat):
    tree = build_from(msgov_event_records(), "ms.gov")
    attach_detections(tree, cat)
    detected = [n for n in tree.script_nodes() if n.detections]
    assert len(detected) == 13
    non_root_script_parents = [
        n for n in detected
        if tree.parent(n.node_id) is not None and tree.parent(n.node_id).is_script
    ]
    assert len(non_root_script_parents) == 12


def test_empty_log_errors():
    with pytest.raises(TreeBuildError):
        build_from([])
    with pytest.raises(TreeBuildError):
        build_tree(
            events_from_records(
                [{"seq": 1, "kind": "script_created", "frame_id": "f0",
                  "node_id": "s", "inline": True}]
            ),
            "example.com",
        )


def test_unknown_frame_skipped_with_warning_count():
    records = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
        {"seq": 2, "kind": "script_created", "frame_id": "f9", "node_id": "s",
         "inline": True},
    ]
    tree = build_from(records)
    assert tree.skipped_events == 1
    assert set(tree.nodes) == {"d0"}


def test_orphan_initiator_attaches_to_containing_document():
    records = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
        {"seq": 2, "kind": "script_created", "frame_id": "f0", "node_id": "s",
         "inline": True, "initiator_node_id": "never-seen"},
    ]
    tree = build_from(records)
    assert tree.parent_id("s") == "d0"


def test_snapshot_identity_for_repeated_node_ids():
    records = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
        {"seq": 2, "kind": "script_created", "frame_id": "f0", "node_id": "img",
         "url": "http://example.com/a.js"},
        {"seq": 3, "kind": "url_changed", "frame_id": "f0", "node_id": "img",
         "url": "http://example.com/b.js"},
        {"seq": 4, "kind": "url_changed", "frame_id": "f0", "node_id": "img",
         "url": "http://example.com/c.js"},
    ]
    tree = build_from(records)
    snapshots = [n for n in tree.iter_nodes() if n.element_id == "img"]
    assert len(snapshots) == 3
    assert [n.url for n in snapshots] == [
        "http://example.com/a.js", "http://example.com/b.js", "http://example.com/c.js"
    ]
    # without an initiator the new snapshot keeps the prior snapshot's parent
    for n in snapshots:
        assert tree.parent_id(n.node_id) == "d0"


def test_probe_hits_resolution_and_unmatched_count():
    records = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
        {"seq": 2, "kind": "script_created", "frame_id": "f0", "node_id": "s",
         "url": "http://example.com/jq.js"},
        {"seq": 3, "kind": "probe_detection", "frame_id": "f0", "node_id": "s",
         "library_id": "jquery", "raw_version": "3.1.0"},
        {"seq": 4, "kind": "probe_detection", "frame_id": "f0", "node_id": "gone",
         "library_id": "jquery", "raw_version": "3.1.0"},
    ]
    tree = build_from(records)
    assert len(tree.probe_hits) == 2
    assert tree.probe_hits[0].implementing_node_id == "s"
    assert tree.probe_hits[1].implementing_node_id is None
    assert tree.unmatched_probe_hits == 1


def test_metrics_root_only():
    tree = build_from([
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
    ])
    m = tree_metrics(tree)
    assert m.node_count == 1
    assert m.depth == 0
    assert m.counts_by_kind == {"document": 1}


def test_metrics_chain_depth():
    records = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
    ]
    prev = "d0"
    for i in range(4):
        records.append(
            {"seq": i + 2, "kind": "script_created", "frame_id": "f0",
             "node_id": f"s{i}", "inline": True, "initiator_node_id": prev}
        )
        prev = f"s{i}"
    tree = build_from(records)
    assert tree_metrics(tree).depth == 4  # 5 nodes, 4 edges


def test_metrics_synthetic_tree_against_hand_enumeration():
    # main doc with a script chain, an image, a frame document with a widget
    records = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
        {"seq": 2, "kind": "script_created", "frame_id": "f0", "node_id": "grey",
         "url": "http://example.com/grey.js"},
        {"seq": 3, "kind": "script_created", "frame_id": "f0", "node_id": "blue",
         "url": "http://widgets.example/blue.js", "initiator_node_id": "grey"},
        {"seq": 4, "kind": "resource_requested", "frame_id": "f0", "node_id": "img1",
         "url": "http://example.com/logo.png", "resource_kind": "image"},
        {"seq": 5, "kind": "document_committed", "frame_id": "f1", "node_id": "ad",
         "url": "http://ads.example/frame.html", "initiator_node_id": "blue",
         "attached_document_node_id": "d0"},
        {"seq": 6, "kind": "script_created", "frame_id": "f1", "node_id": "adjs",
         "inline": True, "initiator_node_id": "ad"},
    ]
    tree = build_from(records)
    m = tree_metrics(tree)
    assert m.node_count == 6
    assert m.counts_by_kind == {
        "document": 2, "script_url": 2, "image": 1, "script_inline": 1,
    }
    assert m.depth == brute_force_depth(tree) == 4
    assert m.documents_per_frame == {"f0": 1, "f1": 1}
    # per-kind median depths from hand enumeration
    assert m.median_depth_by_kind["image"] == 1
    assert m.median_depth_by_kind["document"] == statistics.median([0, 3])


def test_classify_inclusion_cases():
    def node(url):
        return CausalityNode("s", "s", "script_url" if url else "script_inline",
                             url, "f0", None)

    assert classify_inclusion(node(None), "example.com") == "inline"
    assert classify_inclusion(node("http://cdn.example.com/x.js"), "example.com") == "internal"
    assert classify_inclusion(node("http://example.com/x.js"), "example.com") == "internal"
    assert classify_inclusion(node("https://ajax.googleapis.com/x.js"), "example.com") == "external"
    # dot-boundary trap
    assert classify_inclusion(node("http://notexample.com/x.js"), "example.com") == "external"
    # unparsable URL counts as external
    assert classify_inclusion(node("data:text/javascript;base64,xx"), "example.com") == "external"


def test_duplicates_msgov(cat):
    tree = build_from(msgov_event_records(), "ms.gov")
    attach_detections(tree, cat)
    report = duplicate_inclusions(tree)
    jq = next(d for d in report if d.library_id == "jquery")
    assert jq.by_version == {"2.2.0": 12, "2.2.2": 1}
    assert jq.same_version_duplicate
    assert jq.multi_version
    assert jq.distinct_versions == 2


def test_duplicates_mercantil(cat):
    from conftest import mercantil_event_records

    tree = build_from(mercantil_event_records(), "mercantil.com")
    attach_detections(tree, cat)
    report = duplicate_inclusions(tree)
    jq = next(d for d in report if d.library_id == "jquery")
    assert jq.distinct_versions == 4
    assert jq.multi_version
    assert not jq.same_version_duplicate


def test_duplicates_split_across_documents_do_not_flag(cat):
    jq = script_bytes("jquery", "2.2.4")
    records = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
        {"seq": 2, "kind": "document_committed", "frame_id": "f1", "node_id": "d1",
         "url": "http://widgets.example/w.html", "initiator_node_id": "d0",
         "attached_document_node_id": "d0"},
        {"seq": 3, "kind": "script_created", "frame_id": "f0", "node_id": "s0",
         "url": "http://example.com/jq.js",
         "source_digest": digest_of(jq), "source_bytes": len(jq)},
        {"seq": 4, "kind": "script_created", "frame_id": "f1", "node_id": "s1",
         "url": "http://widgets.example/jq.js", "initiator_node_id": "d1",
         "attached_document_node_id": "d1",
         "source_digest": digest_of(jq), "source_bytes": len(jq)},
    ]
    tree = build_from(records)
    attach_detections(tree, cat)
    report = duplicate_inclusions(tree)
    assert len(report) == 2
    assert not any(d.same_version_duplicate or d.multi_version for d in report)


def test_propagate_labels_one_level():
    records = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
        {"seq": 2, "kind": "script_created", "frame_id": "f0", "node_id": "adscript",
         "url": "http://ads.example/ad.js"},
        {"seq": 3, "kind": "label_hint", "frame_id": "f0", "node_id": "adscript",
         "label": "ad"},
    ]
    for i in range(3):
        records.append(
            {"seq": 4 + i, "kind": "script_created", "frame_id": "f0",
             "node_id": f"c{i}", "inline": True, "initiator_node_id": "adscript"}
        )
    tree = build_from(records)
    propagate_labels(tree)
    for i in range(3):
        assert tree.nodes[f"c{i}"].labels == {"ad"}
    assert tree.nodes["d0"].labels == set()


def test_propagate_labels_nested_union():
    records = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
        {"seq": 2, "kind": "script_created", "frame_id": "f0", "node_id": "a",
         "inline": True},
        {"seq": 3, "kind": "label_hint", "frame_id": "f0", "node_id": "a",
         "label": "ad"},
        {"seq": 4, "kind": "script_created", "frame_id": "f0", "node_id": "t",
         "inline": True, "initiator_node_id": "a"},
        {"seq": 5, "kind": "label_hint", "frame_id": "f0", "node_id": "t",
         "label": "tracker"},
        {"seq": 6, "kind": "script_created", "frame_id": "f0", "node_id": "leaf",
         "inline": True, "initiator_node_id": "t"},
    ]
    tree = build_from(records)
    propagate_labels(tree)
    assert tree.nodes["leaf"].labels == {"ad", "tracker"}


def test_propagate_labels_random_trees_match_ancestor_walk():
    for seed in range(25):
        rng = random.Random(seed)
        tree = build_from(random_event_records(rng, 60), "example.com")
        direct = {nid: set(node.labels) for nid, node in tree.nodes.items()}
        propagate_labels(tree)
        # oracle: a node's labels are the union of direct hits over ancestors
        for nid, node in tree.nodes.items():
            expected = set(direct[nid])
            cursor = tree.parent_id(nid)
            while cursor is not None:
                expected |= direct[cursor]
                cursor = tree.parent_id(cursor)
            assert node.labels == expected, f"seed {seed} node {nid}"


def test_propagate_labels_idempotent_and_monotone():
    rng = random.Random(11)
    tree = build_from(random_event_records(rng, 80), "example.com")
    propagate_labels(tree)
    first = {nid: set(n.labels) for nid, n in tree.nodes.items()}
    propagate_labels(tree)
    second = {nid: set(n.labels) for nid, n in tree.nodes.items()}
    assert first == second


def test_random_logs_obey_tree_laws_and_replay_deterministically():
    for seed in range(50):
        rng = random.Random(seed)
        records = random_event_records(rng, 120)
        tree = build_from(records)
        assert_tree_laws(tree)
        assert tree_metrics(tree).depth == brute_force_depth(tree)
        replay = build_from(records)
        assert tree_shape(tree) == tree_shape(replay)


def test_non_monotonic_seq_rejected():
    records = [
        {"seq": 5, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
        {"seq": 5, "kind": "script_created", "frame_id": "f0", "node_id": "s",
         "inline": True},
    ]
    with pytest.raises(Exception):
        parse_event_log(json.dumps(r) for r in records)


def test_export_dot_root_only():
    tree = build_from([
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
    ])
    text = export_dot(tree)
    assert text.startswith("digraph causality {")
    assert '"d0"' in text
    assert "->" not in text


def test_export_dot_deterministic(cat):
    tree1 = build_from(msgov_event_records(), "ms.gov")
    attach_detections(tree1, cat)
    tree2 = build_from(msgov_event_records(), "ms.gov")
    attach_detections(tree2, cat)
    assert export_dot(tree1) == export_dot(tree2)


def test_export_dot_msgov_matches_locked_golden(cat):
    from pathlib import Path

    tree = build_from(msgov_event_records(), "ms.gov")
    attach_detections(tree, cat)
    golden = Path(__file__).parent / "data" / "msgov.dot"
    assert export_dot(tree) == golden.read_text(encoding="utf-8")


def test_export_dot_msgov_shows_13_detected_scripts_under_parents(cat):
    tree = build_from(msgov_event_records(), "ms.gov")
    attach_detections(tree, cat)
    text = export_dot(tree)
    assert text.count("jquery 2.2.0") == 12
    assert text.count("jquery 2.2.2") == 1
    for k in range(1, 13):
        assert f'"inj{(k - 1) % 4 + 1}" -> "jq{k}";' in text
    assert '"d0" -> "jq-main";' in text
    # scripts are filled circles, documents boxes, inline scripts dashed
    assert "shape=box" in text and "shape=circle" in text
