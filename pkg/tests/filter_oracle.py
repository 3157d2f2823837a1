"""Regex-translation oracle and corpus generator for filter matching tests.

The oracle turns a tokenized rule into a Python regex and re-implements the
option checks with plain suffix comparisons, giving an independent matching
engine to compare against.
"""

from __future__ import annotations

import random
import re

from weblibs.filterlist import FilterRule, MatchContext

_SEP_RE = r"(?:[^a-z0-9_\-.%]|$)"
_DOMAIN_ANCHOR_RE = r"^[a-z][a-z0-9+.\-]*://(?:[^/?#]*\.)?"


def rule_regex(rule: FilterRule) -> re.Pattern:
    parts: list[str] = []
    if rule.anchor_domain:
        parts.append(_DOMAIN_ANCHOR_RE)
    elif rule.anchor_start:
        parts.append("^")
    for kind, value in rule.tokens:
        if kind == "lit":
            parts.append(re.escape(value))
        elif kind == "star":
            parts.append(".*")
        else:
            parts.append(_SEP_RE)
    if rule.anchor_end:
        parts.append("$")
    return re.compile("".join(parts))


def _suffix_match(host: str, domain: str) -> bool:
    host, domain = host.lower(), domain.lower()
    return host == domain or host.endswith("." + domain)


def oracle_matches(rule: FilterRule, ctx: MatchContext) -> bool:
    if rule.opt_types and ctx.resource_kind not in rule.opt_types:
        return False
    if rule.opt_third_party is not None and ctx.third_party != rule.opt_third_party:
        return False
    doc = ctx.document_host
    if rule.domain_include and not any(_suffix_match(doc, d) for d in rule.domain_include):
        return False
    if any(_suffix_match(doc, d) for d in rule.domain_exclude):
        return False
    return rule_regex(rule).search(ctx.request_url.lower()) is not None


_HOSTS = [
    "google-analytics.com",
    "www.google-analytics.com",
    "nongoogle-analytics.com",
    "ssl.google-analytics.com",
    "doubleclick.net",
    "ad.doubleclick.net",
    "ads.example.com",
    "example.com",
    "cdn.example.com",
    "notexample.com",
    "tracker.io",
    "api.tracker.io",
    "widgets.social.net",
    "platform.twitter.com",
    "connect.facebook.net",
    "cdn.jsdelivr.net",
    "ajax.googleapis.com",
    "static.adserver.biz",
    "banner-farm.org",
    "pixel.metrics.dev",
]

_PATHS = [
    "/analytics.js",
    "/ga.js",
    "/js/ads/banner.js",
    "/banner/top.gif",
    "/img/pixel.gif",
    "/widgets.js",
    "/libs/jquery/1.2/jquery.min.js",
    "/collect?v=1&t=pageview",
    "/frame/ad.html",
    "/scripts/app.js",
    "/assets/track.min.js",
    "/a/b/c.png",
    "/",
    "/index.html",
    "/banner",
    "/adview/unit.js",
]

_RULE_SHAPES = [
    lambda r: "||" + r.choice(_HOSTS) + "^",
    lambda r: "||" + r.choice(_HOSTS) + "^$script",
    lambda r: "||" + r.choice(_HOSTS) + "/",
    lambda r: "|https://" + r.choice(_HOSTS) + "/",
    lambda r: "/banner/*",
    lambda r: "/" + r.choice(["ads", "banner", "track", "pixel", "adview"]) + "/",
    lambda r: r.choice(["analytics", "collect", "widget", "banner", "pixel"]) + "^",
    lambda r: r.choice(["ads", "track"]) + "*" + r.choice([".js", ".gif", ".png"]),
    lambda r: r.choice([".js", ".gif"]) + "|",
    lambda r: "||" + r.choice(_HOSTS) + "^$image",
    lambda r: "||" + r.choice(_HOSTS) + "^$subdocument",
    lambda r: "||" + r.choice(_HOSTS) + "^$third-party",
    lambda r: "||" + r.choice(_HOSTS) + "^$~third-party",
    lambda r: "||" + r.choice(_HOSTS) + "^$domain=" + r.choice(_HOSTS),
    lambda r: "||" + r.choice(_HOSTS) + "^$domain=~" + r.choice(_HOSTS),
    lambda r: "@@||" + r.choice(_HOSTS) + "^",
    lambda r: "@@||" + r.choice(_HOSTS) + "^$script",
    lambda r: "*" + r.choice(["collect", "pageview", "beacon"]) + "*",
    lambda r: "|http://" + r.choice(_HOSTS) + "/*" + r.choice([".gif", ".js"]),
    lambda r: r.choice(["/ad^", "/ads^", "^track^", "^ad.html"]),
]


def corpus_rule_lines(rng: random.Random, count: int) -> list[str]:
    lines: list[str] = []
    seen: set[str] = set()
    while len(lines) < count:
        line = rng.choice(_RULE_SHAPES)(rng)
        if line not in seen:
            seen.add(line)
            lines.append(line)
    return lines


def corpus_contexts(rng: random.Random, count: int) -> list[MatchContext]:
    contexts: list[MatchContext] = []
    for _ in range(count):
        host = rng.choice(_HOSTS)
        path = rng.choice(_PATHS)
        scheme = rng.choice(["http", "https"])
        port = rng.choice(["", "", "", ":8080"])
        doc_host = rng.choice(_HOSTS)
        third_party = not (
            _suffix_match(host, doc_host) or _suffix_match(doc_host, host)
        )
        contexts.append(
            MatchContext(
                request_url=f"{scheme}://{host}{port}{path}",
                document_host=doc_host,
                resource_kind=rng.choice(["script", "image", "subdocument", "other"]),
                third_party=third_party,
            )
        )
    return contexts
