"""Shared fixtures: a sample catalogue, synthetic reference scripts and
event-log builders for the ms.gov- and mercantil-style trees."""

from __future__ import annotations

import hashlib
import json

import pytest

from weblibs.catalogue import Catalogue, load_catalogue
from weblibs.causality import CausalityNode, CausalityTree
from weblibs.detection import Detection
from weblibs.events import parse_event_log


def script_bytes(library: str, version: str, variant: str = "minified") -> bytes:
    """Deterministic fake release content, padded above the size floor."""
    header = f"/*! {library} v{version} ({variant}) reference fixture */\n"
    body = f"window.__{library.replace('-', '_')}__ = \"{version}\";\n"
    text = header + body
    text += "/* " + "x" * (1200 - len(text) - 6) + " */\n"
    return text.encode("ascii")


def digest_of(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def ref_digest(library: str, version: str, variant: str = "minified") -> str:
    return digest_of(script_bytes(library, version, variant))


_REFFILES = [
    ("jquery", "1.2.3", "minified"),
    ("jquery", "1.6.2", "minified"),
    ("jquery", "1.11.1", "minified"),
    ("jquery", "1.11.1", "full"),
    ("jquery", "2.2.0", "minified"),
    ("jquery", "2.2.2", "minified"),
    ("jquery", "2.2.4", "minified"),
    ("jquery", "3.1.0", "minified"),
    ("modernizr", "2.8.3", "minified"),
    ("remlib", "1.2.0", "minified"),
    ("remlib", "1.2.3", "minified"),
    ("stucklib", "1.2.0", "minified"),
]


def catalogue_records() -> list[dict]:
    recs: list[dict] = [
        {"kind": "library", "id": "jquery", "heuristic_token": "jquery"},
        {"kind": "library", "id": "angular"},
        {"kind": "library", "id": "handlebars"},
        {"kind": "library", "id": "medianlib"},
        {"kind": "library", "id": "modernizr"},
        {"kind": "library", "id": "remlib"},
        {"kind": "library", "id": "stucklib"},
        # jquery
        {"kind": "release", "library": "jquery", "version": "1.2.0", "date": "2007-09-10"},
        {"kind": "release", "library": "jquery", "version": "1.2.3", "date": "2008-02-08"},
        {"kind": "release", "library": "jquery", "version": "1.6.2", "date": "2011-06-30"},
        {"kind": "release", "library": "jquery", "version": "1.6.3", "date": "2011-09-01"},
        {"kind": "release", "library": "jquery", "version": "1.11.1", "date": "2014-05-01"},
        {"kind": "release", "library": "jquery", "version": "2.2.0", "date": "2016-01-08"},
        {"kind": "release", "library": "jquery", "version": "2.2.2", "date": "2016-03-17"},
        {"kind": "release", "library": "jquery", "version": "2.2.4", "date": "2016-05-20"},
        {"kind": "release", "library": "jquery", "version": "3.1.0", "date": "2016-07-07"},
        {"kind": "vuln", "library": "jquery", "id": "jq-2011-selector-xss", "high": "1.6.3"},
        # angular: five records overlapping 1.2.0
        {"kind": "release", "library": "angular", "version": "1.2.0", "date": "2013-11-08"},
        {"kind": "release", "library": "angular", "version": "1.2.1", "date": "2013-11-14"},
        {"kind": "release", "library": "angular", "version": "1.2.9", "date": "2014-01-15"},
        {"kind": "release", "library": "angular", "version": "1.3.0", "date": "2014-10-13"},
        {"kind": "release", "library": "angular", "version": "1.4.0", "date": "2015-05-26"},
        {"kind": "vuln", "library": "angular", "id": "ng-sce-bypass", "high": "1.2.1"},
        {"kind": "vuln", "library": "angular", "id": "ng-jsonp-xss",
         "low": "1.0.0", "high": "1.2.9"},
        {"kind": "vuln", "library": "angular", "id": "ng-sanitize-bypass", "at_most": "1.2.0"},
        {"kind": "vuln", "library": "angular", "id": "ng-expression-injection", "high": "1.3.0"},
        {"kind": "vuln", "library": "angular", "id": "ng-dom-clobbering",
         "low": "1.2.0", "high": "1.2.19"},
        # handlebars: the 1179-day lag pair
        {"kind": "release", "library": "handlebars", "version": "1.0.0", "date": "2013-01-01"},
        {"kind": "release", "library": "handlebars", "version": "4.0.5", "date": "2016-03-25"},
        # medianlib: a 1177-day lag pair
        {"kind": "release", "library": "medianlib", "version": "1.0.0", "date": "2013-01-03"},
        {"kind": "release", "library": "medianlib", "version": "2.0.0", "date": "2016-03-25"},
        # modernizr: no known vulnerabilities
        {"kind": "release", "library": "modernizr", "version": "2.8.3", "date": "2014-03-10"},
        {"kind": "release", "library": "modernizr", "version": "3.3.1", "date": "2016-02-25"},
        # remlib: vulnerable at 1.2.0, clean fix 1.2.3 in the same branch
        {"kind": "release", "library": "remlib", "version": "1.2.0", "date": "2015-01-01"},
        {"kind": "release", "library": "remlib", "version": "1.2.3", "date": "2015-06-01"},
        {"kind": "release", "library": "remlib", "version": "1.3.0", "date": "2015-09-01"},
        {"kind": "vuln", "library": "remlib", "id": "rem-hole", "at_most": "1.2.0"},
        # stucklib: every 1.2.x release is vulnerable
        {"kind": "release", "library": "stucklib", "version": "1.2.0", "date": "2015-01-01"},
        {"kind": "release", "library": "stucklib", "version": "1.2.3", "date": "2015-06-01"},
        {"kind": "vuln", "library": "stucklib", "id": "stuck-hole",
         "low": "1.2.0", "high": "1.3.0"},
    ]
    for library, version, variant in _REFFILES:
        data = script_bytes(library, version, variant)
        recs.append(
            {
                "kind": "reffile",
                "library": library,
                "version": version,
                "variant": variant,
                "bytes": len(data),
                "sha256": digest_of(data),
            }
        )
    return recs


def catalogue_lines(records: list[dict] | None = None) -> list[str]:
    return [json.dumps(rec) for rec in (records or catalogue_records())]


@pytest.fixture(scope="session")
def cat() -> Catalogue:
    return load_catalogue(catalogue_lines())


@pytest.fixture
def catalogue_path(tmp_path):
    path = tmp_path / "catalogue.jsonl"
    path.write_text("\n".join(catalogue_lines()) + "\n", encoding="utf-8")
    return path


def msgov_event_records() -> list[dict]:
    """Main page references one jQuery 2.2.2; four self-hosted scripts inject
    twelve copies of jQuery 2.2.0 into the same document."""
    jq220 = script_bytes("jquery", "2.2.0")
    jq222 = script_bytes("jquery", "2.2.2")
    events: list[dict] = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://www.ms.gov/"},
        {"seq": 2, "kind": "script_created", "frame_id": "f0", "node_id": "jq-main",
         "url": "http://www.ms.gov/js/jquery-2.2.2.min.js",
         "source_digest": digest_of(jq222), "source_bytes": len(jq222)},
    ]
    seq = 3
    for k in range(1, 5):
        injector = script_bytes("msgov-injector", str(k))
        events.append(
            {"seq": seq, "kind": "script_created", "frame_id": "f0",
             "node_id": f"inj{k}", "url": f"http://www.ms.gov/js/widget{k}.js",
             "source_digest": digest_of(injector), "source_bytes": len(injector)}
        )
        seq += 1
    for k in range(1, 13):
        events.append(
            {"seq": seq, "kind": "script_created", "frame_id": "f0",
             "node_id": f"jq{k}",
             "url": "http://www.ms.gov/js/jquery-2.2.0.min.js",
             "initiator_node_id": f"inj{(k - 1) % 4 + 1}",
             "source_digest": digest_of(jq220), "source_bytes": len(jq220)}
        )
        seq += 1
    return events


def mercantil_event_records() -> list[dict]:
    """Four different jQuery versions referenced directly in the main page."""
    events: list[dict] = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://www.mercantil.com/"},
    ]
    for seq, version in enumerate(("1.11.1", "2.2.0", "2.2.2", "2.2.4"), start=2):
        data = script_bytes("jquery", version)
        events.append(
            {"seq": seq, "kind": "script_created", "frame_id": "f0",
             "node_id": f"jq-{version}",
             "url": f"http://www.mercantil.com/js/jquery-{version}.min.js",
             "source_digest": digest_of(data), "source_bytes": len(data)}
        )
    return events


def events_from_records(records: list[dict]):
    return parse_event_log(json.dumps(rec) for rec in records)


def write_event_log_file(tmp_path, name: str, records: list[dict]):
    path = tmp_path / name
    path.write_text(
        "\n".join(json.dumps(rec) for rec in records) + "\n", encoding="utf-8"
    )
    return path


def make_tree_with_detections(
    inclusion_specs: list[dict], site_domain: str = "example.com"
) -> CausalityTree:
    """Hand-build a one-document tree for analysis-level tests.

    Each spec: library, version (SemVer), plus optional url, labels,
    parent ("root" or another spec's node id), method.
    """
    tree = CausalityTree(site_domain)
    root = CausalityNode("d0", "d0", "document", f"http://{site_domain}/", "f0", None)
    tree._add_node(root, None)
    for i, spec in enumerate(inclusion_specs):
        node_id = spec.get("node_id", f"s{i}")
        url = spec.get("url", f"http://{site_domain}/js/lib{i}.js")
        kind = "script_inline" if url is None else "script_url"
        node = CausalityNode(
            node_id, node_id, kind, url, "f0", "d0",
            labels=set(spec.get("labels", ())),
        )
        node.detections = [
            Detection(node_id, spec["library"], spec["version"],
                      spec.get("method", "static"))
        ]
        tree._add_node(node, spec.get("parent", "d0"))
    return tree
