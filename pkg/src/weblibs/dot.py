"""Graphviz rendering of causality trees.

Shape language: filled circles are scripts, boxes are documents, open
circles everything else.  Dashed borders mark inline scripts, thick borders
mark ad/tracker/widget provenance, and fill colour follows the document a
node is attached to (grey for the main document).
"""

from __future__ import annotations

from .causality import CausalityTree

_MAIN_COLOR = "grey80"
_PALETTE = (
    "lightblue",
    "palegreen",
    "lightsalmon",
    "plum",
    "khaki",
    "lightcyan",
    "mistyrose",
    "thistle",
)


def _quote(s: str) -> str:
    # real newlines become DOT line breaks
    escaped = s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return f'"{escaped}"'


def export_dot(tree: CausalityTree) -> str:
    """Deterministic DOT text for a tree (byte-identical across runs)."""
    doc_colors: dict[str, str] = {}
    next_color = 0
    for node in tree.iter_nodes():
        if node.kind != "document":
            continue
        if node.node_id == tree.root_id:
            doc_colors[node.node_id] = _MAIN_COLOR
        else:
            doc_colors[node.node_id] = _PALETTE[next_color % len(_PALETTE)]
            next_color += 1

    lines = ["digraph causality {", "  rankdir=TB;", "  node [fontsize=10];"]
    for node in tree.iter_nodes():
        attached_color = doc_colors.get(node.attached_document or "", _MAIN_COLOR)
        label = node.element_id
        for det in node.detections:
            label += f"\n{det.library_id} {det.version}"
        attrs = [f"label={_quote(label)}"]
        styles = []
        if node.kind == "document":
            attrs.append("shape=box")
            styles.append("filled")
            attrs.append(f"fillcolor={_quote(doc_colors[node.node_id])}")
        elif node.is_script:
            attrs.append("shape=circle")
            styles.append("filled")
            attrs.append(f"fillcolor={_quote(attached_color)}")
            if node.kind == "script_inline":
                styles.append("dashed")
        else:
            attrs.append("shape=circle")
            attrs.append(f"color={_quote(attached_color)}")
        if node.labels:
            attrs.append("penwidth=3")
        if styles:
            attrs.append(f"style={_quote(','.join(styles))}")
        lines.append(f"  {_quote(node.node_id)} [{', '.join(attrs)}];")
    for node in tree.iter_nodes():
        for child in tree.children_ids(node.node_id):
            lines.append(f"  {_quote(node.node_id)} -> {_quote(child)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
