#!/usr/bin/env python3
"""Regenerate the demo inputs under demo/ (catalogue, scripts, event logs,
filter lists). Deterministic: running it twice changes nothing."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DEMO = ROOT / "demo"


def script_bytes(library: str, version: str, variant: str = "minified") -> bytes:
    header = f"/*! {library} v{version} ({variant}) demo build */\n"
    body = f"window.__{library.replace('-', '_')}__ = \"{version}\";\n"
    text = header + body
    text += "/* " + "x" * (1200 - len(text) - 6) + " */\n"
    return text.encode("ascii")


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


LIBRARIES = [
    {"kind": "library", "id": "jquery", "heuristic_token": "jquery"},
    {"kind": "library", "id": "angular"},
    {"kind": "library", "id": "handlebars"},
    {"kind": "library", "id": "modernizr"},
]

RELEASES = [
    ("jquery", "1.2.0", "2007-09-10"),
    ("jquery", "1.2.3", "2008-02-08"),
    ("jquery", "1.6.2", "2011-06-30"),
    ("jquery", "1.6.3", "2011-09-01"),
    ("jquery", "1.11.1", "2014-05-01"),
    ("jquery", "2.2.0", "2016-01-08"),
    ("jquery", "2.2.2", "2016-03-17"),
    ("jquery", "2.2.4", "2016-05-20"),
    ("jquery", "3.1.0", "2016-07-07"),
    ("angular", "1.2.0", "2013-11-08"),
    ("angular", "1.2.1", "2013-11-14"),
    ("angular", "1.2.9", "2014-01-15"),
    ("angular", "1.3.0", "2014-10-13"),
    ("angular", "1.4.0", "2015-05-26"),
    ("handlebars", "1.0.0", "2013-01-01"),
    ("handlebars", "4.0.5", "2016-03-25"),
    ("modernizr", "2.8.3", "2014-03-10"),
    ("modernizr", "3.3.1", "2016-02-25"),
]

VULNS = [
    {"kind": "vuln", "library": "jquery", "id": "jq-2011-selector-xss", "high": "1.6.3"},
    {"kind": "vuln", "library": "angular", "id": "ng-sce-bypass", "high": "1.2.1"},
    {"kind": "vuln", "library": "angular", "id": "ng-jsonp-xss", "low": "1.0.0", "high": "1.2.9"},
    {"kind": "vuln", "library": "angular", "id": "ng-sanitize-bypass", "at_most": "1.2.0"},
    {"kind": "vuln", "library": "angular", "id": "ng-expression-injection", "high": "1.3.0"},
    {"kind": "vuln", "library": "angular", "id": "ng-dom-clobbering",
     "low": "1.2.0", "high": "1.2.19"},
]

REFFILES = [
    ("jquery", "1.2.3"),
    ("jquery", "1.6.2"),
    ("jquery", "1.11.1"),
    ("jquery", "2.2.0"),
    ("jquery", "2.2.2"),
    ("jquery", "2.2.4"),
    ("jquery", "3.1.0"),
    ("angular", "1.2.0"),
    ("modernizr", "2.8.3"),
]


def write_catalogue() -> None:
    records: list[dict] = list(LIBRARIES)
    for library, version, day in RELEASES:
        records.append({"kind": "release", "library": library,
                        "version": version, "date": day})
    records.extend(VULNS)
    for library, version in REFFILES:
        data = script_bytes(library, version)
        records.append({
            "kind": "reffile", "library": library, "version": version,
            "variant": "minified", "bytes": len(data), "sha256": digest(data),
        })
    path = DEMO / "catalogue.jsonl"
    path.write_text("\n".join(json.dumps(r) for r in records) + "\n", encoding="utf-8")
    print(f"wrote {path}")


def write_scripts() -> None:
    out = DEMO / "scripts"
    out.mkdir(parents=True, exist_ok=True)
    for library, version in [("jquery", "1.11.1"), ("jquery", "2.2.0"),
                             ("jquery", "2.2.2"), ("jquery", "1.6.2")]:
        (out / f"{library}-{version}.min.js").write_bytes(script_bytes(library, version))
    (out / "too-small.js").write_bytes(b"window.tiny=1;" + b"/*pad*/" * 140)
    (out / "custom-app.js").write_bytes(
        b"var app = {};\n" + b"/* application code */\n" * 60
    )
    print(f"wrote {out}/")


def _events_ms_gov() -> list[dict]:
    jq220 = script_bytes("jquery", "2.2.0")
    jq222 = script_bytes("jquery", "2.2.2")
    events = [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://www.ms-gov-demo.example/"},
        {"seq": 2, "kind": "script_created", "frame_id": "f0", "node_id": "jq-main",
         "url": "http://www.ms-gov-demo.example/js/jquery-2.2.2.min.js",
         "source_digest": digest(jq222), "source_bytes": len(jq222)},
    ]
    seq = 3
    for k in range(1, 5):
        injector = script_bytes("site-module", str(k))
        events.append({
            "seq": seq, "kind": "script_created", "frame_id": "f0",
            "node_id": f"inj{k}",
            "url": f"http://www.ms-gov-demo.example/js/module{k}.js",
            "source_digest": digest(injector), "source_bytes": len(injector),
        })
        seq += 1
    for k in range(1, 13):
        events.append({
            "seq": seq, "kind": "script_created", "frame_id": "f0",
            "node_id": f"jq{k}",
            "url": "http://www.ms-gov-demo.example/js/jquery-2.2.0.min.js",
            "initiator_node_id": f"inj{(k - 1) % 4 + 1}",
            "source_digest": digest(jq220), "source_bytes": len(jq220),
        })
        seq += 1
    return events


def _events_old_site() -> list[dict]:
    jq162 = script_bytes("jquery", "1.6.2")
    return [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://old-site.example/"},
        {"seq": 2, "kind": "script_created", "frame_id": "f0", "node_id": "jq",
         "url": "http://old-site.example/js/jquery-1.6.2.min.js",
         "source_digest": digest(jq162), "source_bytes": len(jq162)},
        {"seq": 3, "kind": "script_created", "frame_id": "f0", "node_id": "ga",
         "url": "https://www.google-analytics.com/analytics.js",
         "initiator_node_id": "jq"},
        # aliased CDN inclusion, identified at runtime by the probe
        {"seq": 4, "kind": "script_created", "frame_id": "f0", "node_id": "jq-cdn",
         "url": "https://ajax.googleapis.com/ajax/libs/jquery/1.2/jquery.min.js"},
        {"seq": 5, "kind": "probe_detection", "frame_id": "f0", "node_id": "jq-cdn",
         "library_id": "jquery", "raw_version": "1.2.3", "timestamp_ms": 4000},
    ]


def write_events() -> None:
    out = DEMO / "events"
    out.mkdir(parents=True, exist_ok=True)
    for name, events in (("ms-gov-demo.jsonl", _events_ms_gov()),
                         ("old-site.jsonl", _events_old_site())):
        (out / name).write_text(
            "\n".join(json.dumps(e) for e in events) + "\n", encoding="utf-8"
        )
    print(f"wrote {out}/")


def write_filters() -> None:
    out = DEMO / "filters"
    out.mkdir(parents=True, exist_ok=True)
    (out / "trackers.txt").write_text(
        "! sample tracker rules\n"
        "||google-analytics.com^\n"
        "||pixel.metrics.dev^$image\n"
        "@@||google-analytics.com^$domain=analytics-docs.example\n",
        encoding="utf-8",
    )
    (out / "ads.txt").write_text(
        "! sample ad rules\n"
        "||doubleclick.net^\n"
        "/banner/*$script\n"
        "||ads.example.com^$third-party\n",
        encoding="utf-8",
    )
    (out / "widgets.txt").write_text(
        "! sample social widget rules\n"
        "||platform.twitter.com^\n"
        "||connect.facebook.net^\n",
        encoding="utf-8",
    )
    print(f"wrote {out}/")


if __name__ == "__main__":
    DEMO.mkdir(parents=True, exist_ok=True)
    write_catalogue()
    write_scripts()
    write_events()
    write_filters()
