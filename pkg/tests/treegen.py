"""Random crawl event-log generator for tree-law tests.

Produces schema-valid logs exercising every event kind, including events the
builder must skip (unknown frames, unknown initiators) and elements whose
URL changes repeatedly.
"""

from __future__ import annotations

import random


def random_event_records(rng: random.Random, max_events: int = 200) -> list[dict]:
    records: list[dict] = [
        {
            "seq": 1,
            "kind": "document_committed",
            "frame_id": "f0",
            "node_id": "d0",
            "url": f"http://site{rng.randint(0, 999)}.example/",
        }
    ]
    seq = 1
    elements = ["d0"]
    frames = ["f0"]
    next_id = 0

    def fresh(prefix: str) -> str:
        nonlocal next_id
        next_id += 1
        return f"{prefix}{next_id}"

    count = rng.randint(0, max_events - 1)
    for _ in range(count):
        seq += rng.randint(1, 3)  # seq gaps are allowed
        roll = rng.random()
        frame = rng.choice(frames)
        if roll < 0.30:
            node = fresh("s")
            rec = {
                "seq": seq,
                "kind": "script_created",
                "frame_id": frame,
                "node_id": node,
            }
            if rng.random() < 0.3:
                rec["inline"] = True
            else:
                rec["url"] = f"http://assets.example/js/{node}.js"
            if rng.random() < 0.7:
                rec["initiator_node_id"] = rng.choice(elements)
            elif rng.random() < 0.2:
                rec["initiator_node_id"] = "ghost-element"
            records.append(rec)
            elements.append(node)
        elif roll < 0.50:
            node = fresh("r")
            records.append(
                {
                    "seq": seq,
                    "kind": "resource_requested",
                    "frame_id": frame,
                    "node_id": node,
                    "url": f"http://assets.example/{node}.png",
                    "resource_kind": rng.choice(["image", "stylesheet", "other"]),
                    **(
                        {"initiator_node_id": rng.choice(elements)}
                        if rng.random() < 0.6
                        else {}
                    ),
                }
            )
            elements.append(node)
        elif roll < 0.62:
            # commit a document: navigation in an existing frame or a new frame
            node = fresh("d")
            if rng.random() < 0.5:
                target_frame = rng.choice(frames)
            else:
                target_frame = fresh("f")
                frames.append(target_frame)
            rec = {
                "seq": seq,
                "kind": "document_committed",
                "frame_id": target_frame,
                "node_id": node,
                "url": f"http://frames.example/{node}.html",
            }
            if rng.random() < 0.5:
                rec["initiator_node_id"] = rng.choice(elements)
            records.append(rec)
            elements.append(node)
        elif roll < 0.70:
            records.append(
                {
                    "seq": seq,
                    "kind": "url_changed",
                    "frame_id": frame,
                    "node_id": rng.choice(elements + ["never-seen"]),
                    "url": f"http://changed.example/u{seq}",
                    **(
                        {"initiator_node_id": rng.choice(elements)}
                        if rng.random() < 0.5
                        else {}
                    ),
                }
            )
        elif roll < 0.78:
            new_frame = fresh("f")
            frames.append(new_frame)
            records.append(
                {
                    "seq": seq,
                    "kind": "frame_attached",
                    "frame_id": new_frame,
                    "initiator_node_id": rng.choice(elements),
                }
            )
        elif roll < 0.86:
            records.append(
                {
                    "seq": seq,
                    "kind": "label_hint",
                    "frame_id": frame,
                    "node_id": rng.choice(elements),
                    "label": rng.choice(["ad", "tracker", "widget"]),
                }
            )
        elif roll < 0.94:
            records.append(
                {
                    "seq": seq,
                    "kind": "probe_detection",
                    "frame_id": frame,
                    "node_id": rng.choice(elements + [None]),
                    "library_id": rng.choice(["jquery", "angular"]),
                    "raw_version": rng.choice(["1.2.3", "3.1.0", "latest", None]),
                    "timestamp_ms": seq * 100,
                }
            )
        else:
            # event in a frame nobody ever attached: must be skipped
            records.append(
                {
                    "seq": seq,
                    "kind": "script_created",
                    "frame_id": f"phantom{seq}",
                    "node_id": fresh("s"),
                    "inline": True,
                }
            )
    return records


def brute_force_depth(tree, node_id: str | None = None) -> int:
    """Longest root-to-leaf path by naive recursion (independent of
    tree_metrics)."""
    nid = node_id if node_id is not None else tree.root_id
    children = tree.children_ids(nid)
    if not children:
        return 0
    return 1 + max(brute_force_depth(tree, child) for child in children)


def tree_shape(tree) -> dict:
    """Structure snapshot used to compare replayed builds."""
    return {
        "root": tree.root_id,
        "site": tree.site_domain,
        "nodes": {
            nid: (
                node.element_id,
                node.kind,
                node.url,
                node.frame_id,
                node.attached_document,
                tuple(sorted(node.labels)),
            )
            for nid, node in tree.nodes.items()
        },
        "edges": {nid: tree.children_ids(nid) for nid in tree.nodes},
        "skipped": tree.skipped_events,
        "probes": [
            (p.frame_id, p.library_id, p.raw_version, p.implementing_node_id)
            for p in tree.probe_hits
        ],
    }


def assert_tree_laws(tree) -> None:
    assert tree.root_id is not None
    assert tree.edge_count() == len(tree.nodes) - 1
    seen: set[str] = set()
    stack = [tree.root_id]
    while stack:
        nid = stack.pop()
        assert nid not in seen, "cycle or duplicate reach"
        seen.add(nid)
        for child in tree.children_ids(nid):
            assert tree.parent_id(child) == nid
            stack.append(child)
    assert seen == set(tree.nodes), "unreachable nodes"
