"""Causality trees: who caused what to load.

A causality tree has a directed edge A -> B exactly when element A caused
element B to load.  Nodes are time-stamped snapshots of page elements, not
DOM hierarchy: when an element's URL changes, a fresh node is created under
whatever initiated the change, so one <iframe> element can contribute
several document nodes.  Attribute event handlers and string-evaluated code
are modelled as inline script nodes.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass, field
from urllib.parse import urlsplit

from .detection import Detection, ProbeResult
from .events import CrawlEvent

NODE_KINDS = ("document", "script_inline", "script_url", "image", "stylesheet", "other")

INCLUSION_INLINE = "inline"
INCLUSION_INTERNAL = "internal"
INCLUSION_EXTERNAL = "external"


class TreeBuildError(Exception):
    """The event log cannot yield a tree (e.g. no document at all)."""


@dataclass
class CausalityNode:
    """One element snapshot.

    ``node_id`` is unique within the tree; ``element_id`` is the identity the
    crawl log used, shared by successive snapshots of the same element.
    """

    node_id: str
    element_id: str
    kind: str
    url: str | None
    frame_id: str
    attached_document: str | None
    labels: set[str] = field(default_factory=set)
    detections: list[Detection] = field(default_factory=list)
    digest: str | None = None
    byte_length: int | None = None

    @property
    def is_script(self) -> bool:
        return self.kind in ("script_inline", "script_url")


class CausalityTree:
    """Single-rooted, acyclic; every node reachable from the root."""

    def __init__(self, site_domain: str) -> None:
        self.site_domain = site_domain
        self.root_id: str | None = None
        self.nodes: dict[str, CausalityNode] = {}
        self._parent: dict[str, str] = {}
        self._children: dict[str, list[str]] = {}
        self.probe_hits: list[ProbeResult] = []
        self.skipped_events: int = 0
        self.unmatched_probe_hits: int = 0

    @property
    def root(self) -> CausalityNode:
        assert self.root_id is not None
        return self.nodes[self.root_id]

    def parent_id(self, node_id: str) -> str | None:
        return self._parent.get(node_id)

    def parent(self, node_id: str) -> CausalityNode | None:
        pid = self._parent.get(node_id)
        return None if pid is None else self.nodes[pid]

    def children_ids(self, node_id: str) -> list[str]:
        return list(self._children.get(node_id, ()))

    def edge_count(self) -> int:
        return len(self._parent)

    def _add_node(self, node: CausalityNode, parent_id: str | None) -> None:
        self.nodes[node.node_id] = node
        if parent_id is None:
            self.root_id = node.node_id
        else:
            self._parent[node.node_id] = parent_id
            self._children.setdefault(parent_id, []).append(node.node_id)

    def iter_nodes(self):
        return iter(self.nodes.values())

    def script_nodes(self) -> list[CausalityNode]:
        return [n for n in self.nodes.values() if n.is_script]

    def depths(self) -> dict[str, int]:
        """Edge distance from the root for every node."""
        assert self.root_id is not None
        out = {self.root_id: 0}
        stack = [self.root_id]
        while stack:
            nid = stack.pop()
            for child in self._children.get(nid, ()):
                out[child] = out[nid] + 1
                stack.append(child)
        return out


class _Builder:
    def __init__(self, site_domain: str) -> None:
        self.tree = CausalityTree(site_domain)
        # element id -> node_id of its current snapshot
        self.current: dict[str, str] = {}
        self.frame_docs: dict[str, str] = {}
        self.frame_embed_doc: dict[str, str | None] = {}
        self.frame_creator: dict[str, str | None] = {}
        self.known_frames: set[str] = set()

    def _snapshot_id(self, element_id: str, seq: int) -> str:
        if element_id not in self.current and element_id not in self.tree.nodes:
            return element_id
        return f"{element_id}@{seq}"

    def _resolve(self, element_id: str | None) -> str | None:
        if element_id is None:
            return None
        return self.current.get(element_id)

    def _containing_document(self, ev: CrawlEvent) -> str | None:
        attached = self._resolve(ev.attached_document_node_id)
        if attached is not None and self.tree.nodes[attached].kind == "document":
            return attached
        return self.frame_docs.get(ev.frame_id)

    def _skip(self) -> None:
        self.tree.skipped_events += 1

    def _frame_usable(self, ev: CrawlEvent) -> bool:
        return ev.frame_id in self.known_frames

    def feed(self, ev: CrawlEvent) -> None:
        handler = getattr(self, f"_on_{ev.kind}")
        handler(ev)

    def _on_frame_attached(self, ev: CrawlEvent) -> None:
        self.known_frames.add(ev.frame_id)
        self.frame_embed_doc[ev.frame_id] = self._containing_document(ev)
        self.frame_creator[ev.frame_id] = self._resolve(ev.initiator_node_id)

    def _on_document_committed(self, ev: CrawlEvent) -> None:
        element_id = ev.node_id or f"doc:{ev.frame_id}"
        snap = self._snapshot_id(element_id, ev.seq)
        if self.tree.root_id is None:
            node = CausalityNode(snap, element_id, "document", ev.url, ev.frame_id, None)
            self.tree._add_node(node, None)
            self.known_frames.add(ev.frame_id)
            self.frame_embed_doc.setdefault(ev.frame_id, None)
            self.frame_docs[ev.frame_id] = snap
            self.current[element_id] = snap
            return
        # later documents: navigations and subframe commits
        parent = (
            self._resolve(ev.initiator_node_id)
            or self.frame_docs.get(ev.frame_id)
            or self.frame_creator.get(ev.frame_id)
            or self.frame_embed_doc.get(ev.frame_id)
            or self.tree.root_id
        )
        attached = self.frame_embed_doc.get(ev.frame_id)
        if ev.frame_id not in self.known_frames:
            self.known_frames.add(ev.frame_id)
            attached = self._containing_document(ev) or self.tree.root_id
            self.frame_embed_doc[ev.frame_id] = attached
        node = CausalityNode(snap, element_id, "document", ev.url, ev.frame_id, attached)
        self.tree._add_node(node, parent)
        self.frame_docs[ev.frame_id] = snap
        self.current[element_id] = snap

    def _create_child(self, ev: CrawlEvent, kind: str, url: str | None) -> None:
        if self.tree.root_id is None or not self._frame_usable(ev):
            self._skip()
            return
        element_id = ev.node_id or f"{ev.kind}:{ev.seq}"
        snap = self._snapshot_id(element_id, ev.seq)
        # Orphan initiators fall back to the containing document.
        parent = self._resolve(ev.initiator_node_id) or self._containing_document(ev)
        if parent is None:
            self._skip()
            return
        node = CausalityNode(
            snap, element_id, kind, url, ev.frame_id,
            self._containing_document(ev),
            digest=ev.source_digest, byte_length=ev.source_bytes,
        )
        self.tree._add_node(node, parent)
        self.current[element_id] = snap

    def _on_script_created(self, ev: CrawlEvent) -> None:
        kind = "script_inline" if ev.inline else "script_url"
        self._create_child(ev, kind, None if ev.inline else ev.url)

    def _on_resource_requested(self, ev: CrawlEvent) -> None:
        self._create_child(ev, ev.resource_kind, ev.url)

    def _on_url_changed(self, ev: CrawlEvent) -> None:
        if self.tree.root_id is None or not self._frame_usable(ev):
            self._skip()
            return
        if ev.node_id is None:
            self._skip()
            return
        prior_id = self.current.get(ev.node_id)
        if prior_id is None:
            # URL change on an element we never saw: treat as a fresh load.
            self._create_child(ev, "other", ev.url)
            return
        prior = self.tree.nodes[prior_id]
        snap = self._snapshot_id(ev.node_id, ev.seq)
        parent = (
            self._resolve(ev.initiator_node_id)
            or self.tree.parent_id(prior_id)
            or self._containing_document(ev)
            or self.tree.root_id
        )
        node = CausalityNode(
            snap, ev.node_id, prior.kind, ev.url, prior.frame_id,
            prior.attached_document,
            digest=ev.source_digest, byte_length=ev.source_bytes,
        )
        self.tree._add_node(node, parent)
        self.current[ev.node_id] = snap
        if prior.kind == "document" and self.frame_docs.get(prior.frame_id) == prior_id:
            self.frame_docs[prior.frame_id] = snap

    def _on_probe_detection(self, ev: CrawlEvent) -> None:
        if self.tree.root_id is None:
            self._skip()
            return
        implementing = self._resolve(ev.node_id)
        if implementing is None:
            self.tree.unmatched_probe_hits += 1
        assert ev.library_id is not None
        self.tree.probe_hits.append(
            ProbeResult(
                frame_id=ev.frame_id,
                library_id=ev.library_id,
                raw_version=ev.raw_version,
                implementing_node_id=implementing,
                timestamp_ms=max(0, ev.timestamp_ms),
            )
        )

    def _on_label_hint(self, ev: CrawlEvent) -> None:
        target = self._resolve(ev.node_id)
        if target is None or ev.label is None:
            self._skip()
            return
        self.tree.nodes[target].labels.add(ev.label)


def build_tree(events: list[CrawlEvent], site_domain: str) -> CausalityTree:
    """Fold an ordered event log into a causality tree.

    The first document_committed becomes the root.  Unknown initiators
    attach to the containing document; events in frames that were never
    attached or committed are skipped and counted.  Replaying the same log
    always yields an identical tree.
    """
    last_seq: int | None = None
    for ev in events:
        if last_seq is not None and ev.seq <= last_seq:
            raise TreeBuildError(f"events not ordered by seq at {ev.seq}")
        last_seq = ev.seq
    if not any(ev.kind == "document_committed" for ev in events):
        raise TreeBuildError("event log contains no document_committed event")
    builder = _Builder(site_domain)
    for ev in events:
        builder.feed(ev)
    return builder.tree


@dataclass
class TreeMetrics:
    node_count: int
    counts_by_kind: dict[str, int]
    depth: int
    median_depth_by_kind: dict[str, float]
    documents_per_frame: dict[str, int]


def tree_metrics(tree: CausalityTree) -> TreeMetrics:
    """Structural measures: node counts, longest root-to-leaf path (in
    edges; a root-only tree has depth 0), per-kind median depth and how many
    documents each frame cycled through."""
    depths = tree.depths()
    counts: dict[str, int] = {}
    by_kind_depths: dict[str, list[int]] = {}
    docs_per_frame: dict[str, int] = {}
    for node in tree.iter_nodes():
        counts[node.kind] = counts.get(node.kind, 0) + 1
        by_kind_depths.setdefault(node.kind, []).append(depths[node.node_id])
        if node.kind == "document":
            docs_per_frame[node.frame_id] = docs_per_frame.get(node.frame_id, 0) + 1
    return TreeMetrics(
        node_count=len(tree.nodes),
        counts_by_kind=counts,
        depth=max(depths.values()),
        median_depth_by_kind={
            kind: statistics.median(values) for kind, values in by_kind_depths.items()
        },
        documents_per_frame=docs_per_frame,
    )


def host_of(url: str | None) -> str | None:
    if not url:
        return None
    try:
        host = urlsplit(url).hostname
    except ValueError:
        return None
    if not host:
        return None
    return host.rstrip(".").lower()


def same_or_subdomain(host: str, domain: str) -> bool:
    """Dot-boundary suffix match: cdn.example.com is under example.com,
    notexample.com is not."""
    host = host.lower().rstrip(".")
    domain = domain.lower().rstrip(".")
    return host == domain or host.endswith("." + domain)


def classify_inclusion(node: CausalityNode, site_domain: str) -> str:
    """inline / internal / external for a node.

    Internal means the URL host is the crawled site's domain or a subdomain
    of it (dot-boundary match); this deliberately replicates the domain-name
    heuristic, which under-counts co-owned domains, rather than guessing.
    Unparsable URLs classify as external.
    """
    if node.url is None:
        return INCLUSION_INLINE
    host = host_of(node.url)
    if host is None:
        import logging

        logging.getLogger(__name__).warning(
            "unparsable url %r classified external", node.url
        )
        return INCLUSION_EXTERNAL
    if same_or_subdomain(host, site_domain):
        return INCLUSION_INTERNAL
    return INCLUSION_EXTERNAL


@dataclass(frozen=True)
class DocumentDuplicates:
    """Inclusion multiplicity of one library within one document."""

    document: str
    library_id: str
    by_version: dict[str, int]
    distinct_versions: int
    same_version_duplicate: bool
    multi_version: bool


def duplicate_inclusions(tree: CausalityTree) -> list[DocumentDuplicates]:
    """Per (document, library) counts of detected inclusions by version.

    Requires detections to be attached.  A node whose static and dynamic
    versions conflict contributes to both version buckets, keeping the
    duplicate analysis honest about what was actually observed.
    """
    groups: dict[tuple[str, str], dict[str, int]] = {}
    for node in tree.iter_nodes():
        if not node.is_script or not node.detections:
            continue
        doc = node.attached_document or (tree.root_id or "")
        seen: set[tuple[str, str]] = set()
        for det in node.detections:
            key = (det.library_id, str(det.version))
            if key in seen:
                continue
            seen.add(key)
            bucket = groups.setdefault((doc, det.library_id), {})
            bucket[str(det.version)] = bucket.get(str(det.version), 0) + 1
    out: list[DocumentDuplicates] = []
    for (doc, library_id), by_version in sorted(groups.items()):
        out.append(
            DocumentDuplicates(
                document=doc,
                library_id=library_id,
                by_version=dict(sorted(by_version.items())),
                distinct_versions=len(by_version),
                same_version_duplicate=any(c >= 2 for c in by_version.values()),
                multi_version=len(by_version) >= 2,
            )
        )
    return out


def propagate_labels(tree: CausalityTree) -> CausalityTree:
    """Push ad/tracker/widget labels down to all causal descendants.

    Each node ends up with the union of its own labels and every ancestor's
    on the root path.  Mutates the tree in place and returns it; idempotent
    and monotone (labels only grow).
    """
    if tree.root_id is None:
        return tree
    stack = [tree.root_id]
    while stack:
        nid = stack.pop()
        labels = tree.nodes[nid].labels
        for child in tree.children_ids(nid):
            tree.nodes[child].labels |= labels
            stack.append(child)
    return tree
