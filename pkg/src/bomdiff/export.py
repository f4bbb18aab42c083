"""Serializers for the merged graph: GML, JSON diff report, and HTML viewer.

All three writers are deterministic: the same merged graph yields byte
identical output. The HTML writer produces a single self-contained file
with the graph embedded as an inline JSON data island (script element id
"bomgraph-data") consumed by the bundled viewer script; opening it needs
no server or network access.
"""

from __future__ import annotations

import html
import json
import re
from importlib import resources

from ._version import __version__
from .merge import MergedGraph, Origin, collapse_leaves

DATA_ISLAND_ID = "bomgraph-data"
PAYLOAD_SCHEMA_NAME = "bomdiff-payload/1"

# BOTH is blue, first-input-only is pink, second-input-only is yellow;
# suggestion edges are green and the hover accent is teal so the two
# never collide. Overridable per export.
DEFAULT_COLORS = {
    "BOTH": "#4878d0",
    "ONLY_A": "#ee6fa8",
    "ONLY_B": "#e8c22e",
    "SUGGESTED": "#2f9e44",
    "HOVER": "#00bcd4",
}

_GML_KEY_RE = re.compile(r"[^0-9A-Za-z_]")


def _gml_quote(value: str) -> str:
    return '"' + value.replace('"', '""') + '"'


def _gml_key(key: str) -> str:
    return _GML_KEY_RE.sub("_", key)


def _format_score(score: float) -> str:
    return repr(round(score, 6))


def write_gml(merged: MergedGraph) -> str:
    """Serialize the merged graph as GML with compact integer node ids.

    Nodes and edges are ordered by merged id; attribute maps are flattened
    to "a_<key>"/"b_<key>" string fields (keys sanitized to GML identifier
    characters); suggestion edges come last with origin "SUGGESTED" and
    their score.
    """
    node_ids = {merged_id: index for index, merged_id in enumerate(sorted(merged.nodes))}
    lines = ["graph ["]
    lines.append("  directed 1")
    lines.append(f"  label {_gml_quote(merged.provenance.label_a + ' vs ' + merged.provenance.label_b)}")
    for merged_id in sorted(merged.nodes):
        node = merged.nodes[merged_id]
        lines.append("  node [")
        lines.append(f"    id {node_ids[merged_id]}")
        lines.append(f"    label {_gml_quote(merged_id)}")
        lines.append(f"    origin {_gml_quote(node.origin.value)}")
        if node.member_count is not None:
            lines.append(f"    member_count {node.member_count}")
        for prefix, attrs in (("a_", node.attrs_a), ("b_", node.attrs_b)):
            for key, value in (attrs or {}).items():
                lines.append(f"    {_gml_key(prefix + key)} {_gml_quote(value)}")
        lines.append("  ]")
    for source, target in sorted(merged.edges):
        origin = merged.edges[(source, target)]
        lines.append("  edge [")
        lines.append(f"    source {node_ids[source]}")
        lines.append(f"    target {node_ids[target]}")
        lines.append(f"    origin {_gml_quote(origin.value)}")
        lines.append("  ]")
    for suggestion in sorted(merged.suggestions, key=lambda s: (s.a, s.b)):
        lines.append("  edge [")
        lines.append(f"    source {node_ids[suggestion.a]}")
        lines.append(f"    target {node_ids[suggestion.b]}")
        lines.append('    origin "SUGGESTED"')
        lines.append(f"    score {_format_score(suggestion.score)}")
        lines.append("  ]")
    lines.append("]")
    return "\n".join(lines) + "\n"


def report_dict(merged: MergedGraph) -> dict:
    """The diff report as a plain dict; see REPORT_SCHEMA for the shape."""
    unmapped_a = sorted(
        node.id[len("A:"):]
        for node in merged.nodes.values()
        if node.origin is Origin.ONLY_A
    )
    unmapped_b = sorted(
        node.id[len("B:"):]
        for node in merged.nodes.values()
        if node.origin is Origin.ONLY_B
    )
    supernodes = [
        {"id": node.id, "members": node.members, "member_count": node.member_count}
        for node in sorted(merged.nodes.values(), key=lambda n: n.id)
        if node.is_supernode
    ]
    return {
        "tool": {"name": "bomdiff", "version": __version__},
        "provenance": {
            "graph_a": merged.provenance.label_a,
            "graph_b": merged.provenance.label_b,
            "config": merged.provenance.config.to_dict(),
        },
        "counts": {"nodes": merged.node_counts(), "edges": merged.edge_counts()},
        "unmapped_a": unmapped_a,
        "unmapped_b": unmapped_b,
        "suggestions": [
            {
                "a": s.a,
                "b": s.b,
                "score": round(s.score, 6),
                "shared_anchor_count": s.shared_anchor_count,
            }
            for s in merged.suggestions
        ],
        "supernodes": supernodes,
    }


def write_report(merged: MergedGraph) -> str:
    return json.dumps(report_dict(merged), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _graph_payload(merged: MergedGraph) -> dict:
    nodes = []
    for merged_id in sorted(merged.nodes):
        node = merged.nodes[merged_id]
        entry: dict = {
            "id": node.id,
            "origin": node.origin.value,
            "attrs_a": node.attrs_a,
            "attrs_b": node.attrs_b,
        }
        if node.members is not None:
            entry["members"] = node.members
            entry["member_count"] = node.member_count
        nodes.append(entry)
    edges = [
        {"source": source, "target": target, "origin": merged.edges[(source, target)].value}
        for source, target in sorted(merged.edges)
    ]
    return {"nodes": nodes, "edges": edges}


def payload_dict(
    merged: MergedGraph,
    colors: dict[str, str] | None = None,
    initial_variant: str = "expanded",
) -> dict:
    """The viewer data-island payload: the report plus both graph variants."""
    if initial_variant not in ("expanded", "collapsed"):
        raise ValueError(f"initial_variant must be 'expanded' or 'collapsed', got {initial_variant!r}")
    payload = report_dict(merged)
    payload["schema"] = PAYLOAD_SCHEMA_NAME
    payload["colors"] = {**DEFAULT_COLORS, **(colors or {})}
    payload["initial_variant"] = initial_variant
    payload["variants"] = {
        "expanded": _graph_payload(merged),
        "collapsed": _graph_payload(collapse_leaves(merged)),
    }
    return payload


def default_viewer_bundle() -> str:
    return resources.files("bomdiff").joinpath("assets/viewer.js").read_text(encoding="utf-8")


def write_html(
    merged: MergedGraph,
    viewer_bundle: str | None = None,
    colors: dict[str, str] | None = None,
    initial_variant: str = "expanded",
) -> str:
    """Render the self-contained interactive HTML file."""
    bundle = viewer_bundle if viewer_bundle is not None else default_viewer_bundle()
    payload = payload_dict(merged, colors=colors, initial_variant=initial_variant)
    island = json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    island = island.replace("</", "<\\/")
    title = html.escape(
        f"{merged.provenance.label_a} vs {merged.provenance.label_b} - bomdiff"
    )
    return (
        "<!DOCTYPE html>\n"
        '<html lang="en">\n'
        "<head>\n"
        '<meta charset="utf-8">\n'
        '<meta name="viewport" content="width=device-width, initial-scale=1">\n'
        f"<title>{title}</title>\n"
        "</head>\n"
        "<body>\n"
        f'<script type="application/json" id="{DATA_ISLAND_ID}">{island}</script>\n'
        f"<script>\n{bundle}\n</script>\n"
        "</body>\n"
        "</html>\n"
    )


# JSON Schemas for the report and the HTML data island. These are the
# documented contracts; tests validate emitted documents against them.

_ATTRS = {"type": ["object", "null"], "additionalProperties": {"type": "string"}}

_SUGGESTION = {
    "type": "object",
    "required": ["a", "b", "score", "shared_anchor_count"],
    "properties": {
        "a": {"type": "string"},
        "b": {"type": "string"},
        "score": {"type": "number", "minimum": 0, "maximum": 1},
        "shared_anchor_count": {"type": "integer", "minimum": 1},
    },
    "additionalProperties": False,
}

_COUNTS = {
    "type": "object",
    "required": ["BOTH", "ONLY_A", "ONLY_B"],
    "properties": {
        "BOTH": {"type": "integer", "minimum": 0},
        "ONLY_A": {"type": "integer", "minimum": 0},
        "ONLY_B": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}

_REPORT_PROPERTIES = {
    "tool": {
        "type": "object",
        "required": ["name", "version"],
        "properties": {"name": {"type": "string"}, "version": {"type": "string"}},
        "additionalProperties": False,
    },
    "provenance": {
        "type": "object",
        "required": ["graph_a", "graph_b", "config"],
        "properties": {
            "graph_a": {"type": "string"},
            "graph_b": {"type": "string"},
            "config": {"type": "object"},
        },
        "additionalProperties": False,
    },
    "counts": {
        "type": "object",
        "required": ["nodes", "edges"],
        "properties": {"nodes": _COUNTS, "edges": _COUNTS},
        "additionalProperties": False,
    },
    "unmapped_a": {"type": "array", "items": {"type": "string"}},
    "unmapped_b": {"type": "array", "items": {"type": "string"}},
    "suggestions": {"type": "array", "items": _SUGGESTION},
    "supernodes": {
        "type": "array",
        "items": {
            "type": "object",
            "required": ["id", "members", "member_count"],
            "properties": {
                "id": {"type": "string"},
                "members": {"type": "array", "items": {"type": "string"}, "minItems": 2},
                "member_count": {"type": "integer", "minimum": 2},
            },
            "additionalProperties": False,
        },
    },
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "bomdiff diff report",
    "type": "object",
    "required": ["tool", "provenance", "counts", "unmapped_a", "unmapped_b", "suggestions", "supernodes"],
    "properties": _REPORT_PROPERTIES,
    "additionalProperties": False,
}

_VARIANT = {
    "type": "object",
    "required": ["nodes", "edges"],
    "properties": {
        "nodes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "origin", "attrs_a", "attrs_b"],
                "properties": {
                    "id": {"type": "string"},
                    "origin": {"enum": ["BOTH", "ONLY_A", "ONLY_B"]},
                    "attrs_a": _ATTRS,
                    "attrs_b": _ATTRS,
                    "members": {"type": "array", "items": {"type": "string"}},
                    "member_count": {"type": "integer", "minimum": 2},
                },
                "additionalProperties": False,
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["source", "target", "origin"],
                "properties": {
                    "source": {"type": "string"},
                    "target": {"type": "string"},
                    "origin": {"enum": ["BOTH", "ONLY_A", "ONLY_B"]},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

PAYLOAD_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "bomdiff HTML data island",
    "type": "object",
    "required": list(REPORT_SCHEMA["required"]) + ["schema", "colors", "initial_variant", "variants"],
    "properties": {
        **_REPORT_PROPERTIES,
        "schema": {"const": PAYLOAD_SCHEMA_NAME},
        "colors": {"type": "object", "additionalProperties": {"type": "string"}},
        "initial_variant": {"enum": ["expanded", "collapsed"]},
        "variants": {
            "type": "object",
            "required": ["expanded", "collapsed"],
            "properties": {"expanded": _VARIANT, "collapsed": _VARIANT},
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}
