"""Filter list parsing, URL matching semantics and tree labelling."""

from __future__ import annotations

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from weblibs.analysis import attach_detections
from weblibs.causality import build_tree
from weblibs.filterlist import (
    MatchContext,
    label_tree,
    parse_filter_list,
    parse_rule,
    url_matches,
)

from conftest import events_from_records
from filter_oracle import corpus_contexts, corpus_rule_lines, oracle_matches


def rule(line, label="ad"):
    return parse_rule(line, label)


def ctx(url, doc_host="example.com", kind="script", third_party=True):
    return MatchContext(url, doc_host, kind, third_party)


def test_parse_comment_line():
    fs = parse_filter_list(["! comment"], "ad")
    assert fs.rule_count == 0
    assert fs.skipped_comments == 1


def test_parse_domain_anchor_rule():
    fs = parse_filter_list(["||google-analytics.com^"], "tracker")
    assert fs.rule_count == 1
    assert fs.blocking[0].anchor_domain
    assert fs.blocking[0].label == "tracker"


def test_parse_element_hiding_skipped():
    fs = parse_filter_list(["example.com##.banner"], "ad")
    assert fs.rule_count == 0
    assert fs.skipped_element_hiding == 1


def test_parse_unsupported_option_skipped():
    fs = parse_filter_list(["||x.com^$csp=script-src 'none'"], "ad")
    assert fs.rule_count == 0
    assert fs.skipped_unsupported == 1


def test_parse_exception_rules():
    fs = parse_filter_list(["@@||goodads.example^"], "ad")
    assert len(fs.exceptions) == 1
    assert fs.exceptions[0].exception


def test_parse_is_lossless_in_counts():
    lines = [
        "! EasyList-style header",
        "[Adblock Plus 2.0]",
        "",
        "   ",
        "||ads.example.com^",
        "@@||goodads.example^$script",
        "banner^",
        "example.com##.ad",
        "##.generic",
        "||x.com^$websocket",
        "||y.com^$domain=a.com|~b.com",
        "/track/*",
    ]
    fs = parse_filter_list(lines, "ad")
    non_empty = sum(1 for line in lines if line.strip())
    assert fs.rule_count + fs.skip_count == non_empty


def test_domain_anchor_matches_at_host_label_boundary():
    r = rule("||google-analytics.com^")
    assert url_matches(r, ctx("https://www.google-analytics.com/analytics.js"))
    assert url_matches(r, ctx("https://google-analytics.com/analytics.js"))
    assert not url_matches(r, ctx("https://nongoogle-analytics.com/x.js"))
    assert not url_matches(r, ctx("https://google-analytics.com.evil.net/x.js"))


def test_separator_semantics():
    r = rule("analytics^")
    assert url_matches(r, ctx("https://x.com/analytics/collect"))
    assert url_matches(r, ctx("https://x.com/analytics"))  # end of URL
    assert not url_matches(r, ctx("https://x.com/analytics_v2"))  # _ not a separator


def test_wildcard_spans():
    r = rule("/banner/*$script")
    assert url_matches(r, ctx("http://x.com/banner/top.js", kind="script"))
    assert not url_matches(r, ctx("http://x.com/banner/top.gif", kind="image"))


def test_start_and_end_anchors():
    r = rule("|https://secure.example/app.js|")
    assert url_matches(r, ctx("https://secure.example/app.js"))
    assert not url_matches(r, ctx("https://secure.example/app.js?x=1"))
    assert not url_matches(r, ctx("http://proxy/https://secure.example/app.js"))


def test_third_party_option():
    r = rule("||cdn.example.com^$third-party")
    assert url_matches(r, ctx("https://cdn.example.com/x.js", third_party=True))
    assert not url_matches(r, ctx("https://cdn.example.com/x.js", third_party=False))
    r2 = rule("||cdn.example.com^$~third-party")
    assert not url_matches(r2, ctx("https://cdn.example.com/x.js", third_party=True))
    assert url_matches(r2, ctx("https://cdn.example.com/x.js", third_party=False))


def test_domain_option():
    r = rule("||ads.net^$domain=example.com|~shop.example.com")
    assert url_matches(r, ctx("https://ads.net/a.js", doc_host="example.com"))
    assert url_matches(r, ctx("https://ads.net/a.js", doc_host="www.example.com"))
    assert not url_matches(r, ctx("https://ads.net/a.js", doc_host="shop.example.com"))
    assert not url_matches(r, ctx("https://ads.net/a.js", doc_host="other.org"))


def test_filterset_exception_overrides_block():
    fs = parse_filter_list(["||goodads.example^", "@@||goodads.example^"], "ad")
    assert not fs.matches(ctx("https://goodads.example/ad.js"))


def test_matching_is_case_insensitive():
    r = rule("/Banner/")
    assert url_matches(r, ctx("http://x.com/BANNER/x.gif", kind="image"))


def test_url_matches_agrees_with_regex_oracle_on_corpus():
    rng = random.Random(1234)
    rules = []
    for line in corpus_rule_lines(rng, 120):
        try:
            rules.append(parse_rule(line, "ad"))
        except Exception:
            pass
    contexts = corpus_contexts(rng, 400)
    assert rules and contexts
    for r in rules:
        for c in contexts:
            assert url_matches(r, c) == oracle_matches(r, c), (r.raw, c.request_url)


@settings(max_examples=200, deadline=None)
@given(
    host=st.sampled_from(["ads.example.com", "x.y.z.net", "tracker.io"]),
    path=st.text(alphabet="abc/._-%", min_size=0, max_size=12),
    pattern_host=st.sampled_from(["ads.example.com", "example.com", "tracker.io"]),
)
def test_domain_anchor_property_vs_oracle(host, path, pattern_host):
    r = rule(f"||{pattern_host}^")
    c = ctx(f"http://{host}/{path}")
    assert url_matches(r, c) == oracle_matches(r, c)


def _labelled_tree(cat, filter_lines, label="tracker"):
    records = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
        {"seq": 2, "kind": "script_created", "frame_id": "f0", "node_id": "t",
         "url": "https://www.google-analytics.com/analytics.js"},
        {"seq": 3, "kind": "script_created", "frame_id": "f0", "node_id": "child",
         "inline": True, "initiator_node_id": "t"},
    ]
    tree = build_tree(events_from_records(records), "example.com")
    attach_detections(tree, cat)
    sets = [parse_filter_list(filter_lines, label)]
    return label_tree(tree, sets)


def test_label_tree_labels_match_and_propagate(cat):
    tree = _labelled_tree(cat, ["||google-analytics.com^"])
    assert tree.nodes["t"].labels == {"tracker"}
    assert tree.nodes["child"].labels == {"tracker"}
    assert tree.nodes["d0"].labels == set()


def test_label_tree_exception_suppresses(cat):
    tree = _labelled_tree(
        cat, ["||google-analytics.com^", "@@||google-analytics.com^"]
    )
    assert tree.nodes["t"].labels == set()
    assert tree.nodes["child"].labels == set()


def test_label_tree_no_rules_is_identity(cat):
    tree = _labelled_tree(cat, [])
    assert all(not n.labels for n in tree.iter_nodes())


def test_label_tree_idempotent_and_monotone(cat):
    lines = ["||google-analytics.com^"]
    tree = _labelled_tree(cat, lines)
    first = {nid: set(n.labels) for nid, n in tree.nodes.items()}
    label_tree(tree, [parse_filter_list(lines, "tracker")])
    second = {nid: set(n.labels) for nid, n in tree.nodes.items()}
    assert first == second


def test_label_tree_attached_document_chain(cat):
    # script in an ad-labelled frame document is labelled even though its
    # causal parent chain is unlabelled
    records = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://example.com/"},
        {"seq": 2, "kind": "document_committed", "frame_id": "f1", "node_id": "adf",
         "url": "http://ads.adnetwork.example/frame.html",
         "attached_document_node_id": "d0"},
        # created by the main document but attached to the ad frame document
        {"seq": 3, "kind": "script_created", "frame_id": "f1", "node_id": "s",
         "url": "http://example.com/helper.js", "initiator_node_id": "d0",
         "attached_document_node_id": "adf"},
    ]
    tree = build_tree(events_from_records(records), "example.com")
    sets = [parse_filter_list(["||ads.adnetwork.example^"], "ad")]
    label_tree(tree, sets)
    assert "ad" in tree.nodes["adf"].labels
    assert "ad" in tree.nodes["s"].labels
    assert tree.nodes["d0"].labels == set()
