"""Ad/tracker/widget filter lists: parsing and URL matching.

Supports the blocking-rule subset of the conventional filter syntax that is
relevant for labelling scripts and frames: literal patterns with ``*``
wildcards and ``^`` separators, ``||`` domain anchors, ``|`` start/end
anchors, ``@@`` exceptions, and the third-party / script / image /
subdocument / domain= options.  Cosmetic (element-hiding) rules and rules
with other options are counted and skipped, never silently dropped.
Matching flags URLs; nothing is ever blocked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO, Iterable

from .causality import CausalityTree, host_of, propagate_labels, same_or_subdomain

LABELS = ("ad", "tracker", "widget")

RESOURCE_SCRIPT = "script"
RESOURCE_IMAGE = "image"
RESOURCE_SUBDOCUMENT = "subdocument"
RESOURCE_OTHER = "other"

_TYPE_OPTIONS = {RESOURCE_SCRIPT, RESOURCE_IMAGE, RESOURCE_SUBDOCUMENT}

# Characters a `^` separator does NOT match (letters, digits, _ - . %).
_KEEP_CHARS = frozenset("abcdefghijklmnopqrstuvwxyz0123456789_-.%")

TOK_LIT = "lit"
TOK_STAR = "star"
TOK_SEP = "sep"


@dataclass(frozen=True)
class FilterRule:
    raw: str
    tokens: tuple[tuple[str, str], ...]
    anchor_domain: bool
    anchor_start: bool
    anchor_end: bool
    exception: bool
    label: str
    opt_third_party: bool | None = None
    opt_types: frozenset[str] = frozenset()
    domain_include: tuple[str, ...] = ()
    domain_exclude: tuple[str, ...] = ()


@dataclass(frozen=True)
class MatchContext:
    request_url: str
    document_host: str
    resource_kind: str = RESOURCE_OTHER
    third_party: bool = False


@dataclass
class FilterSet:
    """Parsed rules of one list plus counts of everything skipped."""

    label: str
    blocking: list[FilterRule] = field(default_factory=list)
    exceptions: list[FilterRule] = field(default_factory=list)
    skipped_comments: int = 0
    skipped_element_hiding: int = 0
    skipped_unsupported: int = 0
    skipped_malformed: int = 0

    @property
    def rule_count(self) -> int:
        return len(self.blocking) + len(self.exceptions)

    @property
    def skip_count(self) -> int:
        return (
            self.skipped_comments
            + self.skipped_element_hiding
            + self.skipped_unsupported
            + self.skipped_malformed
        )

    def matches(self, ctx: MatchContext) -> bool:
        """True when a blocking rule fires and no exception overrides it."""
        if not any(url_matches(rule, ctx) for rule in self.blocking):
            return False
        return not any(url_matches(rule, ctx) for rule in self.exceptions)


class _Unsupported(Exception):
    pass


class _Malformed(Exception):
    pass


def _parse_options(text: str) -> dict:
    out: dict = {
        "third_party": None,
        "types": set(),
        "domain_include": [],
        "domain_exclude": [],
    }
    for opt in text.split(","):
        opt = opt.strip().lower()
        if not opt:
            raise _Malformed()
        if opt == "third-party":
            out["third_party"] = True
        elif opt == "~third-party":
            out["third_party"] = False
        elif opt in _TYPE_OPTIONS:
            out["types"].add(opt)
        elif opt.startswith("domain="):
            for dom in opt[len("domain="):].split("|"):
                dom = dom.strip()
                if not dom:
                    raise _Malformed()
                if dom.startswith("~"):
                    out["domain_exclude"].append(dom[1:])
                else:
                    out["domain_include"].append(dom)
            if set(out["domain_include"]) & set(out["domain_exclude"]):
                raise _Malformed()
        else:
            raise _Unsupported()
    return out


def _tokenize(pattern: str) -> tuple[tuple[str, str], ...]:
    tokens: list[tuple[str, str]] = []
    lit: list[str] = []

    def flush() -> None:
        if lit:
            tokens.append((TOK_LIT, "".join(lit)))
            lit.clear()

    for ch in pattern:
        if ch == "*":
            flush()
            if not tokens or tokens[-1][0] != TOK_STAR:
                tokens.append((TOK_STAR, "*"))
        elif ch == "^":
            flush()
            tokens.append((TOK_SEP, "^"))
        else:
            lit.append(ch)
    flush()
    return tuple(tokens)


def parse_rule(line: str, label: str) -> FilterRule:
    """Parse one blocking/exception rule line.

    Raises ``_Unsupported`` for rules using options outside the supported
    subset and ``_Malformed`` for lines that cannot be a rule at all.
    """
    text = line.strip()
    exception = text.startswith("@@")
    if exception:
        text = text[2:]
    options: dict = {
        "third_party": None,
        "types": set(),
        "domain_include": [],
        "domain_exclude": [],
    }
    dollar = text.rfind("$")
    if dollar > 0:
        options = _parse_options(text[dollar + 1:])
        text = text[:dollar]
    if not text:
        raise _Malformed()

    anchor_domain = text.startswith("||")
    if anchor_domain:
        text = text[2:]
    anchor_start = not anchor_domain and text.startswith("|")
    if anchor_start:
        text = text[1:]
    anchor_end = text.endswith("|")
    if anchor_end:
        text = text[:-1]
    if not text:
        raise _Malformed()
    tokens = _tokenize(text.lower())
    if not tokens:
        raise _Malformed()
    return FilterRule(
        raw=line.strip(),
        tokens=tokens,
        anchor_domain=anchor_domain,
        anchor_start=anchor_start,
        anchor_end=anchor_end,
        exception=exception,
        label=label,
        opt_third_party=options["third_party"],
        opt_types=frozenset(options["types"]),
        domain_include=tuple(options["domain_include"]),
        domain_exclude=tuple(options["domain_exclude"]),
    )


def parse_filter_list(source: IO[bytes] | IO[str] | Iterable[str], label: str) -> FilterSet:
    """Parse a filter list; every non-empty line becomes a rule or a counted
    skip, so rules + skips equals the non-empty line count."""
    if label not in LABELS:
        raise ValueError(f"unknown label {label!r}")
    fs = FilterSet(label=label)
    for raw_line in source:
        if isinstance(raw_line, bytes):
            raw_line = raw_line.decode("utf-8", errors="replace")
        line = raw_line.strip()
        if not line:
            continue
        if line.startswith("!") or line.startswith("["):
            fs.skipped_comments += 1
            continue
        if "##" in line or "#@#" in line or "#?#" in line:
            fs.skipped_element_hiding += 1
            continue
        try:
            rule = parse_rule(line, label)
        except _Unsupported:
            fs.skipped_unsupported += 1
            continue
        except _Malformed:
            fs.skipped_malformed += 1
            continue
        (fs.exceptions if rule.exception else fs.blocking).append(rule)
    return fs


def _host_span(url: str) -> tuple[int, int]:
    scheme = url.find("://")
    start = scheme + 3 if scheme >= 0 else 0
    end = len(url)
    for ch in "/?#":
        idx = url.find(ch, start)
        if idx >= 0:
            end = min(end, idx)
    return start, end


def _domain_anchor_positions(url: str) -> list[int]:
    start, end = _host_span(url)
    positions = [start]
    for i in range(start, end):
        if url[i] == ".":
            positions.append(i + 1)
    return positions


def _match_at(tokens: tuple[tuple[str, str], ...], ti: int, text: str, pos: int,
              must_end: bool) -> bool:
    n = len(tokens)
    while ti < n:
        kind, value = tokens[ti]
        if kind == TOK_LIT:
            if not text.startswith(value, pos):
                return False
            pos += len(value)
            ti += 1
        elif kind == TOK_SEP:
            if pos < len(text):
                if text[pos] in _KEEP_CHARS:
                    return False
                pos += 1
            # at end of text the separator matches zero-width
            ti += 1
        else:  # TOK_STAR
            ti += 1
            if ti == n:
                return True  # trailing wildcard absorbs the rest, end anchor included
            nk, nv = tokens[ti]
            if nk == TOK_LIT:
                scan = pos
                while True:
                    found = text.find(nv, scan)
                    if found < 0:
                        return False
                    if _match_at(tokens, ti + 1, text, found + len(nv), must_end):
                        return True
                    scan = found + 1
            else:
                for p in range(pos, len(text) + 1):
                    if _match_at(tokens, ti, text, p, must_end):
                        return True
                return False
    return not must_end or pos == len(text)


def _pattern_matches(rule: FilterRule, url: str) -> bool:
    text = url.lower()
    if rule.anchor_domain:
        return any(
            _match_at(rule.tokens, 0, text, p, rule.anchor_end)
            for p in _domain_anchor_positions(text)
        )
    if rule.anchor_start:
        return _match_at(rule.tokens, 0, text, 0, rule.anchor_end)
    kind, value = rule.tokens[0]
    if kind == TOK_LIT:
        scan = 0
        while True:
            found = text.find(value, scan)
            if found < 0:
                return False
            if _match_at(rule.tokens, 1, text, found + len(value), rule.anchor_end):
                return True
            scan = found + 1
    return any(
        _match_at(rule.tokens, 0, text, p, rule.anchor_end)
        for p in range(len(text) + 1)
    )


def url_matches(rule: FilterRule, ctx: MatchContext) -> bool:
    """Standard filter semantics: ``||`` anchors at a host-label boundary,
    ``^`` matches a separator character or the URL end, ``*`` any span, and
    every option must be satisfied."""
    if rule.opt_types and ctx.resource_kind not in rule.opt_types:
        return False
    if rule.opt_third_party is not None and ctx.third_party != rule.opt_third_party:
        return False
    doc_host = ctx.document_host.lower()
    if rule.domain_include and not any(
        same_or_subdomain(doc_host, dom) for dom in rule.domain_include
    ):
        return False
    if any(same_or_subdomain(doc_host, dom) for dom in rule.domain_exclude):
        return False
    return _pattern_matches(rule, ctx.request_url)


_NODE_RESOURCE_KIND = {
    "document": RESOURCE_SUBDOCUMENT,
    "script_inline": RESOURCE_SCRIPT,
    "script_url": RESOURCE_SCRIPT,
    "image": RESOURCE_IMAGE,
    "stylesheet": RESOURCE_OTHER,
    "other": RESOURCE_OTHER,
}


def context_for_node(tree: CausalityTree, node_id: str) -> MatchContext | None:
    node = tree.nodes[node_id]
    if not node.url:
        return None
    doc_host = tree.site_domain
    if node.attached_document is not None:
        attached = tree.nodes.get(node.attached_document)
        if attached is not None:
            doc_host = host_of(attached.url) or tree.site_domain
    elif tree.root_id is not None and node_id != tree.root_id:
        doc_host = host_of(tree.root.url) or tree.site_domain
    req_host = host_of(node.url)
    third_party = True
    if req_host is not None:
        third_party = not (
            same_or_subdomain(req_host, doc_host) or same_or_subdomain(doc_host, req_host)
        )
    return MatchContext(
        request_url=node.url,
        document_host=doc_host,
        resource_kind=_NODE_RESOURCE_KIND[node.kind],
        third_party=third_party,
    )


def label_tree(tree: CausalityTree, sets: list[FilterSet]) -> CausalityTree:
    """Label nodes whose URL matches a net blocking rule, then propagate.

    The crawl logs carry causality ancestry plus frame attachment rather
    than the DOM tree, so in addition to causal propagation a node inherits
    the labels of the documents it is attached to (transitively) - an
    approximation of labelling by DOM ancestry.  Idempotent; labels never
    shrink.
    """
    if tree.root_id is None or not sets:
        return tree
    for node in tree.iter_nodes():
        ctx = context_for_node(tree, node.node_id)
        if ctx is None:
            continue
        for fs in sets:
            if fs.label not in node.labels and fs.matches(ctx):
                node.labels.add(fs.label)
    changed = True
    while changed:
        changed = False
        propagate_labels(tree)
        for node in tree.iter_nodes():
            if node.attached_document is None:
                continue
            attached = tree.nodes.get(node.attached_document)
            if attached is None:
                continue
            before = len(node.labels)
            node.labels |= attached.labels
            if len(node.labels) != before:
                changed = True
    return tree
